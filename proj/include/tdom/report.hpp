#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "tdom/bounds.hpp"
#include "tdom/domination.hpp"
#include "tdom/verify.hpp"

namespace tdom {

// {"bound": "cockayne_upper", "applicable": true, "value": 5, "tight": false}
// value and tight are null when absent.
nlohmann::json to_json(const BoundReport& report);

// {"value": 2, "witness": [0, 5], "stats": {"subsets_examined": .., "branch_nodes": ..}}
// elapsed_ms joins the stats object only when with_timing is set.
nlohmann::json to_json(const DominationResult& result, bool with_timing);

// {"theorem": .., "verdict": "PASS"|"FAIL", "domain": .., "instances": ..,
//  "counterexamples": [{"kind": .., "instance": .., "details": ..}]}
// elapsed_ms is added only when with_timing is set.
nlohmann::json to_json(const VerificationReport& report, bool with_timing);

nlohmann::json to_json(const CircularValue& value);

enum class Format { Json, Text };

/// gamma and gamma_t of g with witnesses. With cross_check the exhaustive
/// solver re-derives both values; a disagreement throws
/// Error{SolverMismatch}.
std::string compute_report(const Graph& g, const SolverConfig& cfg, bool cross_check, bool with_timing, Format format);

/// All bound reports; tight flags are filled in when with_exact is set.
std::string bounds_report(const Graph& g, const SolverConfig& cfg, bool with_exact, Format format);

/// JSON: an array of report objects. Text: one "PASS|FAIL <theorem> ..."
/// line per report, each failure followed by its counterexamples.
std::string verify_report(const std::vector<VerificationReport>& reports, bool with_timing, Format format);

}  // namespace tdom
