#include "tdom/report.hpp"

#include "tdom/error.hpp"

namespace tdom {

namespace {

std::int64_t millis(std::chrono::nanoseconds ns) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(ns).count();
}

std::string_view case_name(CircularCase c) {
  switch (c) {
    case CircularCase::Complete: return "complete";
    case CircularCase::Cycle: return "cycle";
    case CircularCase::Two: return "two";
    case CircularCase::Three: return "three";
    case CircularCase::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json j;
  j["bound"] = bound_key(report.bound);
  j["applicable"] = report.applicable;
  j["value"] = report.value ? nlohmann::json(*report.value) : nlohmann::json(nullptr);
  j["tight"] = report.tight ? nlohmann::json(*report.tight) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const DominationResult& result, bool with_timing) {
  nlohmann::json stats;
  stats["subsets_examined"] = result.stats.subsets_examined;
  stats["branch_nodes"] = result.stats.branch_nodes;
  if (with_timing) stats["elapsed_ms"] = millis(result.stats.elapsed);
  nlohmann::json j;
  j["value"] = result.value;
  j["witness"] = result.witness.to_vector();
  j["stats"] = stats;
  return j;
}

nlohmann::json to_json(const VerificationReport& report, bool with_timing) {
  nlohmann::json cex = nlohmann::json::array();
  for (const auto& c : report.counterexamples) {
    cex.push_back({{"kind", c.kind}, {"instance", c.instance}, {"details", c.details}});
  }
  nlohmann::json j;
  j["theorem"] = theorem_name(report.theorem);
  j["verdict"] = report.passed() ? "PASS" : "FAIL";
  j["domain"] = report.domain;
  j["instances"] = report.instances;
  j["counterexamples"] = cex;
  if (with_timing) j["elapsed_ms"] = millis(report.elapsed);
  return j;
}

nlohmann::json to_json(const CircularValue& value) {
  nlohmann::json j;
  j["n"] = value.n;
  j["d"] = value.d;
  j["case"] = case_name(value.which);
  j["value"] = value.value ? nlohmann::json(*value.value) : nlohmann::json(nullptr);
  j["witness"] = value.witness ? nlohmann::json(value.witness->to_vector()) : nlohmann::json(nullptr);
  return j;
}

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string set_text(VertexSet s) {
  std::string out = "[";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "]";
}

std::string result_text(std::string_view label, const DominationResult& r, bool with_timing) {
  std::string out = std::string(label) + "=" + std::to_string(r.value) + " witness=" + set_text(r.witness) +
                    " subsets_examined=" + std::to_string(r.stats.subsets_examined) +
                    " branch_nodes=" + std::to_string(r.stats.branch_nodes);
  if (with_timing) out += " elapsed_ms=" + std::to_string(millis(r.stats.elapsed));
  return out + "\n";
}

void cross_check(std::string_view what, std::size_t value, std::size_t oracle) {
  if (value != oracle) {
    throw Error(ErrorCode::SolverMismatch, std::string(what) + ": branch-and-bound gave " + std::to_string(value) +
                                               ", exhaustive search gave " + std::to_string(oracle));
  }
}

}  // namespace

std::string compute_report(const Graph& g, const SolverConfig& cfg, bool paranoid, bool with_timing, Format format) {
  const DominationResult gm = gamma(g, cfg);
  const auto gt = gamma_t(g, cfg);
  if (paranoid) {
    SolverConfig oracle = cfg;
    oracle.strategy = Strategy::Exhaustive;
    cross_check("gamma", gm.value, gamma(g, oracle).value);
    if (gt) cross_check("gamma_t", gt->value, gamma_t(g, oracle)->value);
  }
  if (format == Format::Text) {
    std::string out = "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) + "\n";
    out += result_text("gamma", gm, with_timing);
    out += gt ? result_text("gamma_t", *gt, with_timing) : "gamma_t=undefined (isolated vertex)\n";
    return out;
  }
  nlohmann::json j;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["gamma"] = to_json(gm, with_timing);
  j["gamma_t"] = gt ? to_json(*gt, with_timing) : nlohmann::json(nullptr);
  return dump(j);
}

std::string bounds_report(const Graph& g, const SolverConfig& cfg, bool with_exact, Format format) {
  std::optional<std::size_t> exact;
  if (with_exact) {
    if (auto gt = gamma_t(g, cfg)) exact = gt->value;
  }
  const auto reports = all_bounds(g, exact);
  if (format == Format::Text) {
    std::string out;
    for (const auto& r : reports) {
      out += std::string(bound_key(r.bound)) + " applicable=" + (r.applicable ? "true" : "false");
      if (r.value) out += " value=" + std::to_string(*r.value);
      if (r.tight) out += std::string(" tight=") + (*r.tight ? "true" : "false");
      out += "\n";
    }
    return out;
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports) j.push_back(to_json(r));
  return dump(j);
}

std::string verify_report(const std::vector<VerificationReport>& reports, bool with_timing, Format format) {
  if (format == Format::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(to_json(r, with_timing));
    return dump(j);
  }
  std::string out;
  for (const auto& r : reports) {
    out += std::string(r.passed() ? "PASS " : "FAIL ") + std::string(theorem_name(r.theorem)) +
           " instances=" + std::to_string(r.instances) +
           " counterexamples=" + std::to_string(r.counterexamples.size());
    if (with_timing) out += " elapsed_ms=" + std::to_string(millis(r.elapsed));
    out += " domain=\"" + r.domain + "\"\n";
    for (const auto& c : r.counterexamples) {
      std::string inst = c.instance;
      for (auto& ch : inst) {
        if (ch == '\n') ch = ';';
      }
      out += "  " + c.kind + ": " + c.details + " | " + inst + "\n";
    }
  }
  return out;
}

}  // namespace tdom
