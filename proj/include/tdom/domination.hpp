#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "tdom/graph.hpp"

namespace tdom {

/// N[S] = V.
bool is_dominating(const Graph& g, VertexSet s);
/// N(S) = V; every member of S also needs a neighbor in S.
bool is_total_dominating(const Graph& g, VertexSet s);

enum class Strategy {
  // Cardinality-then-lexicographic subset scan; the reported witness is the
  // lexicographically least optimal set.
  Exhaustive,
  BranchAndBound,
};

struct SolverConfig {
  Strategy strategy = Strategy::BranchAndBound;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
  // Branch-and-bound only: disable lower-bound pruning (for soundness tests).
  bool pruning = true;
};

struct SolverStats {
  std::uint64_t subsets_examined = 0;
  std::uint64_t branch_nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct DominationResult {
  std::size_t value = 0;
  VertexSet witness;
  SolverStats stats;
};

/// Domination number. Throws Error{ResourceExhausted} when a configured limit
/// is hit; a limited run never returns a non-optimal value.
DominationResult gamma(const Graph& g, const SolverConfig& cfg = {});

/// Total domination number, or nullopt when g has an isolated vertex.
std::optional<DominationResult> gamma_t(const Graph& g, const SolverConfig& cfg = {});

/// Greedy total dominating set (max new coverage first, lowest index on
/// ties), or nullopt when g has an isolated vertex.
std::optional<VertexSet> greedy_total_dominating(const Graph& g);

/// Greedy dominating set with the same tie-breaking.
VertexSet greedy_dominating(const Graph& g);

}  // namespace tdom
