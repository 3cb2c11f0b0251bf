#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdom/bounds.hpp"
#include "tdom/domination.hpp"
#include "tdom/families.hpp"

namespace tdom {

enum class TheoremId {
  ThmA_CockayneUpper,
  ThmB_ConnectedUpper,
  Thm21_Lower,
  Thm22_Diam2,
  Thm23_Girth,
  Sandwich_2Gamma,
  PathCycleFormula,
  Thm31_BipartiteExtremal,
  Cor_TreeStar,
  Thm41_Circular2,
  Thm42_Circular3,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::ThmA_CockayneUpper,      TheoremId::ThmB_ConnectedUpper, TheoremId::Thm21_Lower,
    TheoremId::Thm22_Diam2,             TheoremId::Thm23_Girth,         TheoremId::Sandwich_2Gamma,
    TheoremId::PathCycleFormula,        TheoremId::Thm31_BipartiteExtremal, TheoremId::Cor_TreeStar,
    TheoremId::Thm41_Circular2,         TheoremId::Thm42_Circular3,
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

enum class Scale { Quick, Full };

struct Counterexample {
  std::string kind;      // "violation" or "unverified"
  std::string instance;  // FamilySpec string or edge-list text; replayable
  std::string details;

  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::ThmA_CockayneUpper;
  std::string domain;
  std::uint64_t instances = 0;
  std::vector<Counterexample> counterexamples;  // sorted
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return counterexamples.empty(); }
};

struct VerifyOptions {
  Scale scale = Scale::Quick;
  unsigned jobs = 1;
};

// Fixed seeds for the random domains.
inline constexpr std::uint64_t kRandomGraphDomainSeed = 0x7d0a5eed2010ULL;
inline constexpr std::uint64_t kRandomTreeDomainSeed = 0x7d0a7ee52010ULL;
inline constexpr std::size_t kRandomGraphDomainSize = 500;
inline constexpr std::size_t kRandomTreeDomainSize = 200;

/// Random-graph domain shared by the connected, diameter and girth arms:
/// n in [4, 16], p in {0.15, 0.25, 0.35, 0.5}.
std::vector<FamilySpec> random_graph_domain();
/// Random-tree domain: n in [2, 16].
std::vector<FamilySpec> random_tree_domain();

/// Ground-truth solver used inside the harness: exhaustive on small graphs,
/// branch-and-bound above.
std::optional<DominationResult> exact_gamma_t(const Graph& g);
DominationResult exact_gamma(const Graph& g);

VerificationReport verify(TheoremId theorem, const VerifyOptions& options = {});

// ---- Sweeps -------------------------------------------------------------

inline constexpr std::size_t kMaxSweepInstances = 10000;

/// Expand a range spec such as "circular:n=6..14,d=3" or
/// "star+matching:t=2..4,r=0..2" into concrete families. Integer parameters
/// accept "a" or "a..b"; the first canonical key varies slowest. Parameter
/// combinations outside the family's domain are skipped. Throws
/// Error{DomainTooLarge} beyond kMaxSweepInstances.
std::vector<FamilySpec> expand_sweep(std::string_view range_spec);

struct SweepRow {
  FamilySpec spec;
  std::size_t n = 0;
  std::size_t gamma = 0;
  std::optional<std::size_t> gamma_t;
  std::vector<BoundReport> bounds;
  std::optional<bool> extremal;
};

std::vector<SweepRow> sweep(const std::vector<FamilySpec>& specs, const SolverConfig& cfg = {}, unsigned jobs = 1);

/// Column names in their fixed order.
const std::vector<std::string>& sweep_columns();
/// CSV with a header row; columns empty means all, in the fixed order.
std::string sweep_csv(const std::vector<SweepRow>& rows, const std::vector<std::string>& columns = {});

}  // namespace tdom
