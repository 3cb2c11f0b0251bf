#include "tdom/graph.hpp"

#include <algorithm>
#include <limits>

#include "tdom/error.hpp"

namespace tdom {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::RejectedEdge: return "RejectedEdge";
    case ErrorCode::InvalidFamily: return "InvalidFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DomainTooLarge: return "DomainTooLarge";
    case ErrorCode::ResourceExhausted: return "ResourceExhausted";
    case ErrorCode::Undefined: return "Undefined";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SolverMismatch: return "SolverMismatch";
  }
  return "Unknown";
}

namespace {

void check_vertex(Vertex v, std::size_t n) {
  if (v >= n) {
    throw Error(ErrorCode::OutOfRange,
                "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
  }
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
  if (n == 0 || n > kMaxVertices) {
    throw Error(ErrorCode::OutOfRange, "vertex count must be in [1, 64], got " + std::to_string(n));
  }
  for (const auto& [u, v] : edges) {
    if (u == v) throw Error(ErrorCode::RejectedEdge, "self-loop at vertex " + std::to_string(u));
    check_vertex(u, n);
    check_vertex(v, n);
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t sum = 0;
  for (std::size_t v = 0; v < n_; ++v) sum += adj_[v].size();
  return sum / 2;
}

VertexSet Graph::neighborhood(Vertex v) const {
  check_vertex(v, n_);
  return adj_[v];
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  check_vertex(v, n_);
  return adj_[v] | VertexSet::single(v);
}

VertexSet Graph::set_neighborhood(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s & vertices()) out |= adj_[v];
  return out;
}

VertexSet Graph::closed_set_neighborhood(VertexSet s) const {
  return set_neighborhood(s) | (s & vertices());
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v, n_);
  return adj_[v].size();
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, adj_[v].size());
  return best;
}

std::size_t Graph::min_degree() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t v = 0; v < n_; ++v) best = std::min(best, adj_[v].size());
  return best;
}

VertexSet Graph::isolated_vertices() const {
  VertexSet out;
  for (Vertex v = 0; v < n_; ++v) {
    if (adj_[v].empty()) out.insert(v);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
  VertexSet seen;
  for (Vertex p : perm) {
    check_vertex(p, n_);
    seen.insert(p);
  }
  if (seen.size() != n_) throw Error(ErrorCode::InvalidArgument, "not a permutation");
  std::vector<Edge> mapped;
  for (const auto& [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return Graph(n_, mapped);
}

namespace {

// Distances from src by frontier expansion; unreachable vertices keep max().
std::array<std::size_t, kMaxVertices> bfs_levels(const Graph& g, Vertex src) {
  std::array<std::size_t, kMaxVertices> dist;
  dist.fill(std::numeric_limits<std::size_t>::max());
  VertexSet seen = VertexSet::single(src);
  VertexSet frontier = seen;
  std::size_t level = 0;
  while (!frontier.empty()) {
    for (Vertex v : frontier) dist[v] = level;
    frontier = g.set_neighborhood(frontier) - seen;
    seen |= frontier;
    ++level;
  }
  return dist;
}

VertexSet reachable_from(const Graph& g, Vertex src) {
  VertexSet seen = VertexSet::single(src);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    frontier = g.set_neighborhood(frontier) - seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) { return reachable_from(g, 0) == g.vertices(); }

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = reachable_from(g, left.front());
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

Distance diameter(const Graph& g) {
  if (!is_connected(g)) return Distance::infinite();
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto dist = bfs_levels(g, v);
    for (Vertex u = 0; u < g.order(); ++u) best = std::max(best, dist[u]);
  }
  return Distance::finite(best);
}

Distance girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::array<std::size_t, kMaxVertices> dist;
  std::array<Vertex, kMaxVertices> parent;
  std::array<Vertex, kMaxVertices> queue;
  for (Vertex root = 0; root < n; ++root) {
    dist.fill(std::numeric_limits<std::size_t>::max());
    dist[root] = 0;
    parent[root] = root;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      Vertex u = queue[head++];
      // No shorter cycle can be closed beyond this depth from this root.
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.adj(u)) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return Distance::infinite();
  return Distance::finite(best);
}

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition parts;
  for (VertexSet comp : components(g)) {
    VertexSet side = VertexSet::single(comp.front());
    VertexSet other;
    VertexSet frontier = side;
    bool on_a = true;
    while (!frontier.empty()) {
      VertexSet next = g.set_neighborhood(frontier);
      if (next.intersects(on_a ? side : other)) return std::nullopt;
      next -= (side | other);
      (on_a ? other : side) |= next;
      frontier = next;
      on_a = !on_a;
    }
    // Edges inside a side only arise between vertices at equal BFS depth,
    // which the intersects() check above rejects level by level.
    parts.a |= side;
    parts.b |= other;
  }
  return parts;
}

bool is_tree(const Graph& g) { return g.edge_count() + 1 == g.order() && is_connected(g); }

StructuralProfile profile(const Graph& g) {
  StructuralProfile p;
  p.max_degree = g.max_degree();
  p.min_degree = g.min_degree();
  p.connected = is_connected(g);
  p.diameter = diameter(g);
  p.girth = girth(g);
  p.isolated = g.isolated_vertices();
  p.bipartition = bipartition(g);
  return p;
}

}  // namespace tdom
