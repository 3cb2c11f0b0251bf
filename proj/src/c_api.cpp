#include "tdom/tdom.h"

#include <string>

#include "tdom/bounds.hpp"
#include "tdom/domination.hpp"
#include "tdom/error.hpp"
#include "tdom/families.hpp"
#include "tdom/report.hpp"
#include "tdom/verify.hpp"

struct tdom_graph {
  tdom::Graph graph;
};

struct tdom_text {
  std::string data;
};

namespace {

thread_local std::string g_last_error;

tdom_status status_of(tdom::ErrorCode code) {
  using tdom::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return TDOM_INVALID_ARGUMENT;
    case ErrorCode::OutOfRange: return TDOM_OUT_OF_RANGE;
    case ErrorCode::RejectedEdge: return TDOM_REJECTED_EDGE;
    case ErrorCode::InvalidFamily: return TDOM_INVALID_FAMILY;
    case ErrorCode::ParseError: return TDOM_PARSE_ERROR;
    case ErrorCode::DomainTooLarge: return TDOM_DOMAIN_TOO_LARGE;
    case ErrorCode::ResourceExhausted: return TDOM_RESOURCE_EXHAUSTED;
    case ErrorCode::Undefined: return TDOM_UNDEFINED;
    case ErrorCode::NotATree: return TDOM_NOT_A_TREE;
    case ErrorCode::OutOfDomain: return TDOM_OUT_OF_DOMAIN;
    case ErrorCode::IoError: return TDOM_IO_ERROR;
    case ErrorCode::SolverMismatch: return TDOM_SOLVER_MISMATCH;
  }
  return TDOM_INTERNAL_ERROR;
}

tdom_status fail(tdom_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename F>
tdom_status guarded(F&& body) {
  try {
    return body();
  } catch (const tdom::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TDOM_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(TDOM_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(TDOM_INTERNAL_ERROR, "unknown exception");
  }
}

#define TDOM_REQUIRE(cond)                                              \
  do {                                                                  \
    if (!(cond)) return fail(TDOM_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

tdom::SolverConfig to_config(const tdom_solver_config* c) {
  tdom::SolverConfig cfg;
  if (c == nullptr) return cfg;
  if (c->strategy == TDOM_STRATEGY_EXHAUSTIVE) {
    cfg.strategy = tdom::Strategy::Exhaustive;
  } else if (c->strategy != TDOM_STRATEGY_BRANCH_AND_BOUND) {
    throw tdom::Error(tdom::ErrorCode::InvalidArgument, "unknown strategy " + std::to_string(c->strategy));
  }
  if (c->node_limit != 0) cfg.node_limit = c->node_limit;
  if (c->time_limit_ms != 0) cfg.time_limit = std::chrono::milliseconds(c->time_limit_ms);
  cfg.pruning = c->disable_pruning == 0;
  return cfg;
}

void fill(const tdom::DominationResult& r, tdom_result* out) {
  out->value = static_cast<uint32_t>(r.value);
  out->witness = r.witness.bits();
  out->subsets_examined = r.stats.subsets_examined;
  out->branch_nodes = r.stats.branch_nodes;
  out->elapsed_ns = static_cast<uint64_t>(r.stats.elapsed.count());
}

tdom_status emit_graph(tdom::Graph g, tdom_graph** out) {
  *out = new tdom_graph{std::move(g)};
  return TDOM_OK;
}

tdom_status emit_text(std::string s, tdom_text** out) {
  *out = new tdom_text{std::move(s)};
  return TDOM_OK;
}

tdom::Format format_of(unsigned flags) {
  return (flags & TDOM_FORMAT_TEXT) != 0 ? tdom::Format::Text : tdom::Format::Json;
}

}  // namespace

extern "C" {

const char* tdom_version(void) { return "1.0.0"; }

const char* tdom_status_name(tdom_status status) {
  switch (status) {
    case TDOM_OK: return "ok";
    case TDOM_INVALID_ARGUMENT: return "invalid argument";
    case TDOM_OUT_OF_RANGE: return "out of range";
    case TDOM_REJECTED_EDGE: return "rejected edge";
    case TDOM_INVALID_FAMILY: return "invalid family";
    case TDOM_PARSE_ERROR: return "parse error";
    case TDOM_DOMAIN_TOO_LARGE: return "domain too large";
    case TDOM_RESOURCE_EXHAUSTED: return "resource exhausted";
    case TDOM_UNDEFINED: return "undefined";
    case TDOM_NOT_A_TREE: return "not a tree";
    case TDOM_OUT_OF_DOMAIN: return "out of domain";
    case TDOM_IO_ERROR: return "i/o error";
    case TDOM_SOLVER_MISMATCH: return "solver mismatch";
    case TDOM_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* tdom_last_error(void) { return g_last_error.c_str(); }

tdom_status tdom_graph_create(uint32_t n, const uint32_t* endpoints, size_t edge_count, tdom_graph** out) {
  return guarded([&] {
    TDOM_REQUIRE(out != nullptr);
    TDOM_REQUIRE(endpoints != nullptr || edge_count == 0);
    std::vector<tdom::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    return emit_graph(tdom::Graph(n, edges), out);
  });
}

tdom_status tdom_graph_parse(const char* text, size_t length, tdom_graph** out) {
  return guarded([&] {
    TDOM_REQUIRE(out != nullptr);
    TDOM_REQUIRE(text != nullptr || length == 0);
    return emit_graph(tdom::parse_edge_list(std::string_view(text, length)), out);
  });
}

tdom_status tdom_graph_load(const char* path, tdom_graph** out) {
  return guarded([&] {
    TDOM_REQUIRE(path != nullptr && out != nullptr);
    return emit_graph(tdom::read_edge_list_file(path), out);
  });
}

tdom_status tdom_graph_from_family(const char* spec, tdom_graph** out) {
  return guarded([&] {
    TDOM_REQUIRE(spec != nullptr && out != nullptr);
    return emit_graph(tdom::generate(tdom::FamilySpec::parse(spec)), out);
  });
}

void tdom_graph_free(tdom_graph* graph) { delete graph; }

uint32_t tdom_graph_order(const tdom_graph* graph) {
  return graph == nullptr ? 0 : static_cast<uint32_t>(graph->graph.order());
}

size_t tdom_graph_edge_count(const tdom_graph* graph) { return graph == nullptr ? 0 : graph->graph.edge_count(); }

tdom_status tdom_graph_neighbors(const tdom_graph* graph, uint32_t v, uint64_t* out) {
  return guarded([&] {
    TDOM_REQUIRE(graph != nullptr && out != nullptr);
    *out = graph->graph.neighborhood(v).bits();
    return TDOM_OK;
  });
}

tdom_status tdom_graph_to_edge_list(const tdom_graph* graph, tdom_text** out) {
  return guarded([&] {
    TDOM_REQUIRE(graph != nullptr && out != nullptr);
    return emit_text(tdom::format_edge_list(graph->graph), out);
  });
}

tdom_status tdom_is_dominating(const tdom_graph* graph, uint64_t set, int* out) {
  return guarded([&] {
    TDOM_REQUIRE(graph != nullptr && out != nullptr);
    *out = tdom::is_dominating(graph->graph, tdom::VertexSet(set)) ? 1 : 0;
    return TDOM_OK;
  });
}

tdom_status tdom_is_total_dominating(const tdom_graph* graph, uint64_t set, int* out) {
  return guarded([&] {
    TDOM_REQUIRE(graph != nullptr && out != nullptr);
    *out = tdom::is_total_dominating(graph->graph, tdom::VertexSet(set)) ? 1 : 0;
    return TDOM_OK;
  });
}

tdom_status tdom_gamma(const tdom_graph* graph, const tdom_solver_config* config, tdom_result* out) {
  return guarded([&] {
    TDOM_REQUIRE(graph != nullptr && out != nullptr);
    fill(tdom::gamma(graph->graph, to_config(config)), out);
    return TDOM_OK;
  });
}

tdom_status tdom_gamma_t(const tdom_graph* graph, const tdom_solver_config* config, tdom_result* out) {
  return guarded([&] {
    TDOM_REQUIRE(graph != nullptr && out != nullptr);
    auto r = tdom::gamma_t(graph->graph, to_config(config));
    if (!r) return fail(TDOM_UNDEFINED, "graph has an isolated vertex; no total dominating set exists");
    fill(*r, out);
    return TDOM_OK;
  });
}

tdom_status tdom_greedy_total_dominating(const tdom_graph* graph, uint64_t* out) {
  return guarded([&] {
    TDOM_REQUIRE(graph != nullptr && out != nullptr);
    auto s = tdom::greedy_total_dominating(graph->graph);
    if (!s) return fail(TDOM_UNDEFINED, "graph has an isolated vertex; no total dominating set exists");
    *out = s->bits();
    return TDOM_OK;
  });
}

tdom_status tdom_path_cycle_formula(int is_cycle, uint32_t n, uint32_t* out) {
  return guarded([&] {
    TDOM_REQUIRE(out != nullptr);
    *out = static_cast<uint32_t>(
        tdom::path_cycle_formula(is_cycle ? tdom::PathOrCycle::Cycle : tdom::PathOrCycle::Path, n));
    return TDOM_OK;
  });
}

tdom_status tdom_circular_gamma_t(uint32_t n, uint32_t d, tdom_circular* out) {
  return guarded([&] {
    TDOM_REQUIRE(out != nullptr);
    const tdom::CircularValue cv = tdom::circular_gamma_t(n, d);
    switch (cv.which) {
      case tdom::CircularCase::Complete: out->which = TDOM_CIRCULAR_COMPLETE; break;
      case tdom::CircularCase::Cycle: out->which = TDOM_CIRCULAR_CYCLE; break;
      case tdom::CircularCase::Two: out->which = TDOM_CIRCULAR_TWO; break;
      case tdom::CircularCase::Three: out->which = TDOM_CIRCULAR_THREE; break;
      case tdom::CircularCase::Unknown: out->which = TDOM_CIRCULAR_UNKNOWN; break;
    }
    out->value = cv.value ? static_cast<uint32_t>(*cv.value) : 0;
    out->has_witness = cv.witness ? 1 : 0;
    out->witness = cv.witness ? cv.witness->bits() : 0;
    return TDOM_OK;
  });
}

tdom_status tdom_compute_report(const tdom_graph* graph, const tdom_solver_config* config, unsigned flags,
                                tdom_text** out) {
  return guarded([&] {
    TDOM_REQUIRE(graph != nullptr && out != nullptr);
    return emit_text(tdom::compute_report(graph->graph, to_config(config), (flags & TDOM_CROSS_CHECK) != 0,
                                          (flags & TDOM_WITH_TIMING) != 0, format_of(flags)),
                     out);
  });
}

tdom_status tdom_bounds_report(const tdom_graph* graph, const tdom_solver_config* config, unsigned flags,
                               tdom_text** out) {
  return guarded([&] {
    TDOM_REQUIRE(graph != nullptr && out != nullptr);
    return emit_text(
        tdom::bounds_report(graph->graph, to_config(config), (flags & TDOM_NO_EXACT) == 0, format_of(flags)), out);
  });
}

tdom_status tdom_verify_report(const char* theorem, int scale, unsigned jobs, unsigned flags, tdom_text** out,
                               int* all_passed) {
  return guarded([&] {
    TDOM_REQUIRE(theorem != nullptr && out != nullptr);
    std::vector<tdom::TheoremId> ids;
    if (std::string_view(theorem) == "all") {
      ids.assign(std::begin(tdom::kAllTheorems), std::end(tdom::kAllTheorems));
    } else if (auto id = tdom::parse_theorem(theorem)) {
      ids.push_back(*id);
    } else {
      return fail(TDOM_INVALID_ARGUMENT, "unknown theorem '" + std::string(theorem) + "'");
    }
    if (scale != TDOM_SCALE_QUICK && scale != TDOM_SCALE_FULL) {
      return fail(TDOM_INVALID_ARGUMENT, "unknown scale " + std::to_string(scale));
    }
    tdom::VerifyOptions options;
    options.scale = scale == TDOM_SCALE_FULL ? tdom::Scale::Full : tdom::Scale::Quick;
    options.jobs = jobs == 0 ? 1 : jobs;
    std::vector<tdom::VerificationReport> reports;
    bool passed = true;
    for (auto id : ids) {
      reports.push_back(tdom::verify(id, options));
      passed = passed && reports.back().passed();
    }
    if (all_passed != nullptr) *all_passed = passed ? 1 : 0;
    return emit_text(tdom::verify_report(reports, (flags & TDOM_WITH_TIMING) != 0, format_of(flags)), out);
  });
}

tdom_status tdom_sweep_csv(const char* range_spec, const char* columns, const tdom_solver_config* config,
                           unsigned jobs, tdom_text** out) {
  return guarded([&] {
    TDOM_REQUIRE(range_spec != nullptr && out != nullptr);
    std::vector<std::string> cols;
    if (columns != nullptr && *columns != '\0') {
      std::string_view rest(columns);
      while (true) {
        auto comma = rest.find(',');
        cols.emplace_back(rest.substr(0, comma));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    }
    auto rows = tdom::sweep(tdom::expand_sweep(range_spec), to_config(config), jobs == 0 ? 1 : jobs);
    return emit_text(tdom::sweep_csv(rows, cols), out);
  });
}

const char* tdom_text_data(const tdom_text* text) { return text == nullptr ? "" : text->data.c_str(); }

size_t tdom_text_size(const tdom_text* text) { return text == nullptr ? 0 : text->data.size(); }

void tdom_text_free(tdom_text* text) { delete text; }

}  // extern "C"
