#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdom/vertex_set.hpp"

namespace tdom {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, 1 <= n <= 64.
///
/// Adjacency is stored as one VertexSet per vertex, so N(v) and N(S) are a
/// handful of word operations. Instances are immutable once built.
class Graph {
 public:
  /// Throws Error{RejectedEdge} on a self-loop and Error{OutOfRange} on an
  /// endpoint >= n or n outside [1, 64]. Repeated pairs (in either
  /// orientation) collapse to one edge.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  explicit Graph(std::size_t n) : Graph(n, std::span<const Edge>{}) {}

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;

  VertexSet vertices() const { return VertexSet::universe(n_); }

  VertexSet neighborhood(Vertex v) const;
  VertexSet closed_neighborhood(Vertex v) const;
  VertexSet set_neighborhood(VertexSet s) const;
  VertexSet closed_set_neighborhood(VertexSet s) const;

  // Unchecked access for inner loops.
  VertexSet adj(Vertex v) const { return adj_[v]; }

  bool has_edge(Vertex u, Vertex v) const { return u < n_ && adj_[u].contains(v); }
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;
  VertexSet isolated_vertices() const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Vertex v of this graph becomes perm[v] in the result.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t v = 0; v < a.n_; ++v) {
      if (a.adj_[v] != b.adj_[v]) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Length that may be infinite (disconnected diameter, acyclic girth).
class Distance {
 public:
  static constexpr Distance infinite() { return Distance(); }
  static constexpr Distance finite(std::size_t value) { return Distance(value); }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }
  // Precondition: is_finite().
  constexpr std::size_t value() const { return *value_; }

  friend constexpr bool operator==(const Distance&, const Distance&) = default;

  std::string to_string() const { return is_finite() ? std::to_string(*value_) : "inf"; }

 private:
  constexpr Distance() = default;
  constexpr explicit Distance(std::size_t v) : value_(v) {}
  std::optional<std::size_t> value_;
};

struct Bipartition {
  VertexSet a;
  VertexSet b;
};

struct StructuralProfile {
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  Distance diameter = Distance::infinite();
  Distance girth = Distance::infinite();
  bool connected = false;
  VertexSet isolated;
  std::optional<Bipartition> bipartition;
};

bool is_connected(const Graph& g);
Distance diameter(const Graph& g);
Distance girth(const Graph& g);
/// Two-coloring with the lowest vertex of every component on side a.
std::optional<Bipartition> bipartition(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
bool is_tree(const Graph& g);

StructuralProfile profile(const Graph& g);

// Edge-list text format:
//   n m
//   u v      (m lines, 0-based)
// '#' starts a comment running to end of line; blank lines are ignored.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);

}  // namespace tdom
