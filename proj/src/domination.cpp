#include "tdom/domination.hpp"

#include <array>

#include "tdom/error.hpp"

namespace tdom {

bool is_dominating(const Graph& g, VertexSet s) { return g.closed_set_neighborhood(s) == g.vertices(); }

bool is_total_dominating(const Graph& g, VertexSet s) { return g.set_neighborhood(s) == g.vertices(); }

namespace {

using Clock = std::chrono::steady_clock;

// Both problems are set cover over vertex-indexed sets: vertex v covers
// cover[v] (N(v) or N[v]). Both neighborhoods are symmetric, so the vertices
// able to cover u are exactly cover[u].
struct CoverInstance {
  std::size_t n = 0;
  VertexSet full;
  std::array<VertexSet, kMaxVertices> cover{};
};

CoverInstance make_instance(const Graph& g, bool total) {
  CoverInstance inst;
  inst.n = g.order();
  inst.full = g.vertices();
  for (Vertex v = 0; v < inst.n; ++v) {
    inst.cover[v] = total ? g.adj(v) : g.adj(v) | VertexSet::single(v);
  }
  return inst;
}

class Limits {
 public:
  Limits(const SolverConfig& cfg, Clock::time_point start) : cfg_(cfg), start_(start) {}

  void tick(std::uint64_t count) const {
    if (cfg_.node_limit && count > *cfg_.node_limit) {
      throw Error(ErrorCode::ResourceExhausted, "node limit of " + std::to_string(*cfg_.node_limit) + " exceeded");
    }
    if (cfg_.time_limit && (count & 0xfff) == 0 && Clock::now() - start_ > *cfg_.time_limit) {
      throw Error(ErrorCode::ResourceExhausted,
                  "time limit of " + std::to_string(cfg_.time_limit->count()) + " ms exceeded");
    }
  }

 private:
  const SolverConfig& cfg_;
  Clock::time_point start_;
};

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const CoverInstance& inst, const Limits& limits, SolverStats& stats)
      : inst_(inst), limits_(limits), stats_(stats) {}

  // First k-subset in lexicographic order whose cover is complete.
  std::optional<VertexSet> search(std::size_t k) {
    k_ = k;
    found_.reset();
    visit(0, VertexSet{}, VertexSet{});
    return found_;
  }

 private:
  bool visit(Vertex start, VertexSet chosen, VertexSet covered) {
    if (chosen.size() == k_) {
      limits_.tick(++stats_.subsets_examined);
      if (covered == inst_.full) {
        found_ = chosen;
        return true;
      }
      return false;
    }
    const std::size_t need = k_ - chosen.size();
    for (Vertex v = start; v + need <= inst_.n; ++v) {
      if (visit(v + 1, chosen | VertexSet::single(v), covered | inst_.cover[v])) return true;
    }
    return false;
  }

  const CoverInstance& inst_;
  const Limits& limits_;
  SolverStats& stats_;
  std::size_t k_ = 0;
  std::optional<VertexSet> found_;
};

VertexSet greedy_cover(const CoverInstance& inst) {
  VertexSet chosen;
  VertexSet uncovered = inst.full;
  while (!uncovered.empty()) {
    std::size_t best_gain = 0;
    Vertex best = 0;
    for (Vertex v = 0; v < inst.n; ++v) {
      std::size_t gain = (inst.cover[v] & uncovered).size();
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    // Callers guarantee every vertex is coverable.
    chosen.insert(best);
    uncovered -= inst.cover[best];
  }
  return chosen;
}

class BranchAndBound {
 public:
  BranchAndBound(const CoverInstance& inst, const SolverConfig& cfg, const Limits& limits, SolverStats& stats,
                 VertexSet incumbent)
      : inst_(inst), pruning_(cfg.pruning), limits_(limits), stats_(stats), best_(incumbent) {}

  VertexSet solve() {
    visit(VertexSet{}, VertexSet{}, inst_.full);
    return best_;
  }

 private:
  void visit(VertexSet chosen, VertexSet covered, VertexSet allowed) {
    limits_.tick(++stats_.branch_nodes);
    if (covered == inst_.full) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const VertexSet uncovered = inst_.full - covered;
    if (pruning_) {
      // Counting bound on the residual: each further vertex covers at most
      // max_gain of the still-uncovered vertices.
      std::size_t max_gain = 0;
      for (Vertex v : allowed) max_gain = std::max(max_gain, (inst_.cover[v] & uncovered).size());
      if (max_gain == 0) return;
      std::size_t bound = chosen.size() + (uncovered.size() + max_gain - 1) / max_gain;
      if (bound >= best_.size()) return;
    }
    // Some vertex covering the lowest uncovered vertex must be chosen. Once a
    // candidate's subtree is finished it is excluded from its siblings.
    const Vertex target = uncovered.front();
    for (Vertex c : inst_.cover[target] & allowed) {
      allowed.erase(c);
      visit(chosen | VertexSet::single(c), covered | inst_.cover[c], allowed);
    }
  }

  const CoverInstance& inst_;
  bool pruning_;
  const Limits& limits_;
  SolverStats& stats_;
  VertexSet best_;
};

DominationResult solve(const CoverInstance& inst, const SolverConfig& cfg) {
  const auto start = Clock::now();
  Limits limits(cfg, start);
  DominationResult result;
  if (cfg.strategy == Strategy::Exhaustive) {
    ExhaustiveSearch search(inst, limits, result.stats);
    for (std::size_t k = 1; k <= inst.n; ++k) {
      if (auto found = search.search(k)) {
        result.witness = *found;
        break;
      }
    }
  } else {
    BranchAndBound search(inst, cfg, limits, result.stats, greedy_cover(inst));
    result.witness = search.solve();
  }
  result.value = result.witness.size();
  result.stats.elapsed = Clock::now() - start;
  return result;
}

}  // namespace

DominationResult gamma(const Graph& g, const SolverConfig& cfg) { return solve(make_instance(g, false), cfg); }

std::optional<DominationResult> gamma_t(const Graph& g, const SolverConfig& cfg) {
  if (!g.isolated_vertices().empty()) return std::nullopt;
  return solve(make_instance(g, true), cfg);
}

std::optional<VertexSet> greedy_total_dominating(const Graph& g) {
  if (!g.isolated_vertices().empty()) return std::nullopt;
  VertexSet s = greedy_cover(make_instance(g, true));
  // Full open coverage already gives every member a neighbor in s; the
  // repair pass keeps the output valid should the selection rule change.
  for (Vertex v : s) {
    if (!g.adj(v).intersects(s)) s.insert(g.adj(v).front());
  }
  return s;
}

VertexSet greedy_dominating(const Graph& g) { return greedy_cover(make_instance(g, false)); }

}  // namespace tdom
