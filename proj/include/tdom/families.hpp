#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tdom/graph.hpp"

namespace tdom {

/// Seeded 64-bit generator behind every random family, so instances are
/// reproducible from (params, seed) alone. Wraps std::mt19937_64, whose output
/// sequence is fixed by the standard; the standard distributions are not, so
/// bounded draws use a plain modulo.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

/// Exact edge probability num/den. Parsed from "0.15" (-> 15/100) or "3/20".
struct Probability {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Probability parse(std::string_view text);
  std::string to_string() const;
  // One Bernoulli draw: rng.below(den) < num.
  bool draw(Rng& rng) const { return rng.below(den) < num; }

  friend bool operator==(const Probability&, const Probability&) = default;
};

enum class FamilyKind {
  Path,
  Cycle,
  Complete,
  Star,
  StarPlusMatching,
  CircularComplete,
  RandomGraph,
  RandomTree,
  RandomBipartite,
};

/// Canonical string forms:
///   path:n=8  cycle:n=5  complete:n=6  star:t=4  star+matching:t=3,r=2
///   circular:n=10,d=3  random:n=12,p=0.3,seed=42  random-tree:n=10,seed=7
///   random-bipartite:n=10,p=0.3,seed=1
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint32_t t = 0;
  std::uint32_t r = 0;
  Probability p;
  std::uint64_t seed = 0;

  static FamilySpec path(std::uint32_t n) { return make(FamilyKind::Path, n); }
  static FamilySpec cycle(std::uint32_t n) { return make(FamilyKind::Cycle, n); }
  static FamilySpec complete(std::uint32_t n) { return make(FamilyKind::Complete, n); }
  static FamilySpec star(std::uint32_t t) { return star_plus_matching(t, 0).with_kind(FamilyKind::Star); }
  static FamilySpec star_plus_matching(std::uint32_t t, std::uint32_t r) {
    FamilySpec s = make(FamilyKind::StarPlusMatching, 0);
    s.t = t;
    s.r = r;
    return s;
  }
  static FamilySpec circular(std::uint32_t n, std::uint32_t d) {
    FamilySpec s = make(FamilyKind::CircularComplete, n);
    s.d = d;
    return s;
  }
  static FamilySpec random_graph(std::uint32_t n, Probability p, std::uint64_t seed) {
    FamilySpec s = make(FamilyKind::RandomGraph, n);
    s.p = p;
    s.seed = seed;
    return s;
  }
  static FamilySpec random_tree(std::uint32_t n, std::uint64_t seed) {
    FamilySpec s = make(FamilyKind::RandomTree, n);
    s.seed = seed;
    return s;
  }
  static FamilySpec random_bipartite(std::uint32_t n, Probability p, std::uint64_t seed) {
    return random_graph(n, p, seed).with_kind(FamilyKind::RandomBipartite);
  }

  /// Vertex count of the generated graph.
  std::uint32_t order() const;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  static FamilySpec make(FamilyKind kind, std::uint32_t n) {
    FamilySpec s;
    s.kind = kind;
    s.n = n;
    return s;
  }
  FamilySpec with_kind(FamilyKind k) const {
    FamilySpec s = *this;
    s.kind = k;
    return s;
  }
};

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_name(std::string_view name);
/// Parameter keys in canonical order, e.g. {"n", "d"} for circular.
std::vector<std::string_view> family_parameters(FamilyKind kind);

/// Throws Error{InvalidFamily} if the spec's parameters are out of domain.
void validate(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);

/// Decode a Prüfer sequence of length n-2 (entries < n) into a labeled tree.
Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence);

// ---- Exhaustive labeled enumeration --------------------------------------

enum class GraphFilter : unsigned {
  All = 0,
  Connected = 1U << 0,
  Bipartite = 1U << 1,
  NoIsolated = 1U << 2,
};

constexpr GraphFilter operator|(GraphFilter a, GraphFilter b) {
  return static_cast<GraphFilter>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has_flag(GraphFilter set, GraphFilter flag) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
}

bool passes(const Graph& g, GraphFilter filter);

inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// Number of labeled simple graphs on n vertices, 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(std::size_t n);

/// Bit k of mask selects the k-th pair of (0,1),(0,2),...,(0,n-1),(1,2),...
Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask);

/// Single-consumer stream over every labeled graph on n vertices in edge-mask
/// order, skipping those failing the filter. n must be in [1, 7].
class LabeledGraphStream {
 public:
  LabeledGraphStream(std::size_t n, GraphFilter filter);
  LabeledGraphStream(std::size_t n, GraphFilter filter, std::uint64_t first_mask, std::uint64_t last_mask);

  std::optional<Graph> next();
  // Edge mask of the graph most recently returned by next().
  std::uint64_t mask() const { return current_ - 1; }

 private:
  std::size_t n_;
  GraphFilter filter_;
  std::uint64_t current_;
  std::uint64_t end_;
};

}  // namespace tdom
