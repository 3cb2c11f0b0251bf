#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tdom/graph.hpp"

namespace tdom {

enum class BoundId {
  CockayneUpper,    // no isolated vertex: gamma_t <= n - Delta + 1
  ConnectedUpper,   // connected, Delta < n - 1: gamma_t <= n - Delta
  NOverDeltaLower,  // no isolated vertex: gamma_t >= ceil(n / Delta)
  Diam2Upper,       // diameter 2: gamma_t <= delta + 1
  GirthUpper,       // girth >= 5, delta >= 2: gamma_t <= n - ceil(g / 2) + 1
};

inline constexpr BoundId kAllBounds[] = {BoundId::CockayneUpper, BoundId::ConnectedUpper, BoundId::NOverDeltaLower,
                                         BoundId::Diam2Upper, BoundId::GirthUpper};

/// Stable snake_case key, e.g. "cockayne_upper".
std::string_view bound_key(BoundId id);
bool is_lower_bound(BoundId id);

struct BoundReport {
  BoundId bound = BoundId::CockayneUpper;
  bool applicable = false;
  std::optional<std::size_t> value;  // present iff applicable
  std::optional<bool> tight;         // present iff applicable and exact known

  // An applicable bound is violated when it is on the wrong side of exact.
  bool violated_by(std::size_t exact) const;
};

/// Every bound, gated by its hypotheses. A bound whose hypotheses fail is
/// reported as not applicable and carries no value.
std::vector<BoundReport> all_bounds(const Graph& g, std::optional<std::size_t> exact = std::nullopt);
std::vector<BoundReport> all_bounds(const Graph& g, const StructuralProfile& prof,
                                    std::optional<std::size_t> exact = std::nullopt);
BoundReport evaluate_bound(BoundId id, const Graph& g, const StructuralProfile& prof,
                           std::optional<std::size_t> exact = std::nullopt);

enum class PathOrCycle { Path, Cycle };

/// Closed-form gamma_t of P_n and C_n: n/2 when 4 | n, floor(n/2) + 1
/// otherwise. Throws Error{OutOfDomain} for n < 3.
std::size_t path_cycle_formula(PathOrCycle kind, std::size_t n);

/// How circular_gamma_t arrived at its answer.
enum class CircularCase {
  Complete,        // d = 1: K_{n,1} = K_n
  Cycle,           // d = 2, n = 5: K_{5,2} is C_5
  Two,             // d >= 3, n >= 4d - 2
  Three,           // d >= 3, 3d <= n <= 4d - 3
  Unknown,         // d >= 3 and 2d <= n < 3d, or d = 2 with n != 5: no closed form
};

struct CircularValue {
  std::size_t n = 0;
  std::size_t d = 0;
  CircularCase which = CircularCase::Unknown;
  std::optional<std::size_t> value;
  std::optional<VertexSet> witness;
};

/// gamma_t of the circular complete graph K_{n,d}. Throws
/// Error{InvalidFamily} when n < 2d or d < 1.
CircularValue circular_gamma_t(std::size_t n, std::size_t d);

struct StarMatchingShape {
  std::size_t t = 0;  // star leaves, >= 1
  std::size_t r = 0;  // matching edges

  friend bool operator==(const StarMatchingShape&, const StarMatchingShape&) = default;
};

/// (t, r) when g is exactly K_{1,t} plus r disjoint copies of K_2. A graph of
/// k disjoint edges reads as t = 1, r = k - 1.
std::optional<StarMatchingShape> recognize_star_plus_matching(const Graph& g);

/// exact == n - Delta + 1. Throws Error{Undefined} if g has an isolated vertex.
bool achieves_extremal(const Graph& g, std::size_t exact);

/// achieves_extremal for trees. Throws Error{NotATree} on other input.
bool is_extremal_tree(const Graph& g, std::size_t exact);

/// Some vertex is adjacent to every other vertex (n >= 2) and there are no
/// other edges.
bool is_star(const Graph& g);

}  // namespace tdom
