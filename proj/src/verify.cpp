#include "tdom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "tdom/error.hpp"

namespace tdom {

namespace {

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
};

constexpr TheoremInfo kTheoremNames[] = {
    {TheoremId::ThmA_CockayneUpper, "ThmA_CockayneUpper"},
    {TheoremId::ThmB_ConnectedUpper, "ThmB_ConnectedUpper"},
    {TheoremId::Thm21_Lower, "Thm21_Lower"},
    {TheoremId::Thm22_Diam2, "Thm22_Diam2"},
    {TheoremId::Thm23_Girth, "Thm23_Girth"},
    {TheoremId::Sandwich_2Gamma, "Sandwich_2Gamma"},
    {TheoremId::PathCycleFormula, "PathCycleFormula"},
    {TheoremId::Thm31_BipartiteExtremal, "Thm31_BipartiteExtremal"},
    {TheoremId::Cor_TreeStar, "Cor_TreeStar"},
    {TheoremId::Thm41_Circular2, "Thm41_Circular2"},
    {TheoremId::Thm42_Circular3, "Thm42_Circular3"},
};

// Largest order solved exhaustively inside the harness.
constexpr std::size_t kExhaustiveCutoff = 8;
constexpr std::chrono::milliseconds kCellTimeLimit{60'000};

SolverConfig harness_config(const Graph& g) {
  SolverConfig cfg;
  cfg.strategy = g.order() <= kExhaustiveCutoff ? Strategy::Exhaustive : Strategy::BranchAndBound;
  cfg.time_limit = kCellTimeLimit;
  return cfg;
}

struct CellResult {
  std::uint64_t instances = 0;
  std::vector<Counterexample> counterexamples;

  void violation(std::string instance, std::string details) {
    counterexamples.push_back({"violation", std::move(instance), std::move(details)});
  }
};

using Cell = std::function<CellResult()>;

// Runs cells on up to `jobs` threads; the merged result does not depend on
// scheduling.
CellResult run_cells(const std::vector<Cell>& cells, unsigned jobs) {
  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = cells[i]();
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  CellResult merged;
  for (auto& r : results) {
    merged.instances += r.instances;
    std::move(r.counterexamples.begin(), r.counterexamples.end(), std::back_inserter(merged.counterexamples));
  }
  std::sort(merged.counterexamples.begin(), merged.counterexamples.end());
  return merged;
}

// Checks one graph; returns false when the graph falls outside the
// theorem's hypotheses (not counted as an instance).
using GraphCheck = std::function<bool(const Graph&, const std::string& instance, CellResult&)>;

// Wraps a check so that solver refusals become "unverified" records.
CellResult check_one(const GraphCheck& check, const Graph& g, const std::string& instance) {
  CellResult out;
  try {
    if (check(g, instance, out)) ++out.instances;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ResourceExhausted) throw;
    ++out.instances;
    out.counterexamples.push_back({"unverified", instance, e.what()});
  }
  return out;
}

void absorb(CellResult& into, CellResult&& part) {
  into.instances += part.instances;
  std::move(part.counterexamples.begin(), part.counterexamples.end(), std::back_inserter(into.counterexamples));
}

constexpr std::uint64_t kMasksPerCell = 1U << 14;

void add_enumeration_cells(std::vector<Cell>& cells, std::size_t max_n, GraphFilter filter, const GraphCheck& check) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t first = 0; first < total; first += kMasksPerCell) {
      cells.push_back([=] {
        CellResult out;
        LabeledGraphStream stream(n, filter, first, first + kMasksPerCell);
        while (auto g = stream.next()) {
          // The edge list is only rendered for the rare failing graph.
          CellResult one;
          bool counted = false;
          try {
            counted = check(*g, "", one);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::ResourceExhausted) throw;
            counted = true;
            one.counterexamples.push_back({"unverified", "", e.what()});
          }
          if (counted) ++one.instances;
          for (auto& c : one.counterexamples) c.instance = format_edge_list(*g);
          absorb(out, std::move(one));
        }
        return out;
      });
    }
  }
}

void add_family_cells(std::vector<Cell>& cells, const std::vector<FamilySpec>& specs, const GraphCheck& check) {
  for (const auto& spec : specs) {
    cells.push_back([=] { return check_one(check, generate(spec), spec.to_string()); });
  }
}

std::string fmt_values(std::initializer_list<std::pair<std::string_view, std::size_t>> items) {
  std::string out;
  for (const auto& [k, v] : items) {
    if (!out.empty()) out += ", ";
    out += std::string(k) + "=" + std::to_string(v);
  }
  return out;
}

// ---- Individual arms ------------------------------------------------------

bool check_bound(BoundId id, const Graph& g, CellResult& out) {
  const StructuralProfile prof = profile(g);
  BoundReport rep = evaluate_bound(id, g, prof);
  if (!rep.applicable) return false;
  auto gt = exact_gamma_t(g);
  if (!gt) return false;
  if (rep.violated_by(gt->value)) {
    out.violation("", std::string(bound_key(id)) + " " +
                          fmt_values({{"bound", *rep.value}, {"gamma_t", gt->value}, {"n", g.order()},
                                      {"max_degree", prof.max_degree}, {"min_degree", prof.min_degree}}));
  }
  return true;
}

GraphCheck bound_check(BoundId id) {
  return [id](const Graph& g, const std::string& instance, CellResult& out) {
    std::size_t before = out.counterexamples.size();
    bool counted = check_bound(id, g, out);
    for (std::size_t i = before; i < out.counterexamples.size(); ++i) out.counterexamples[i].instance = instance;
    return counted;
  };
}

// Theorem B plus its consequence: a connected graph attaining n - Delta + 1
// has Delta >= n - 1.
bool check_connected_upper(const Graph& g, const std::string& instance, CellResult& out) {
  if (g.order() < 2 || !is_connected(g)) return false;
  auto gt = exact_gamma_t(g);
  const std::size_t n = g.order();
  const std::size_t max_deg = g.max_degree();
  const BoundReport rep = evaluate_bound(BoundId::ConnectedUpper, g, profile(g));
  if (rep.violated_by(gt->value)) {
    out.violation(instance, "connected_upper " + fmt_values({{"bound", *rep.value}, {"gamma_t", gt->value},
                                                             {"n", n}, {"max_degree", max_deg}}));
  }
  if (gt->value == n - max_deg + 1 && max_deg + 1 < n) {
    out.violation(instance, "extremal connected graph with max_degree < n - 1: " +
                                fmt_values({{"gamma_t", gt->value}, {"max_degree", max_deg}}));
  }
  return true;
}

bool check_sandwich(const Graph& g, const std::string& instance, CellResult& out) {
  auto gt = exact_gamma_t(g);
  if (!gt) return false;
  DominationResult gm = exact_gamma(g);
  if (gm.value > gt->value || gt->value > 2 * gm.value) {
    out.violation(instance, "gamma <= gamma_t <= 2 gamma fails: " +
                                fmt_values({{"gamma", gm.value}, {"gamma_t", gt->value}}));
  }
  return true;
}

bool check_bipartite_extremal(const Graph& g, const std::string& instance, CellResult& out) {
  auto gt = exact_gamma_t(g);
  if (!gt || !bipartition(g)) return false;
  const bool extremal = achieves_extremal(g, gt->value);
  const auto shape = recognize_star_plus_matching(g);
  if (extremal != shape.has_value()) {
    out.violation(instance, std::string(extremal ? "extremal but not K_{1,t} + rK_2" : "K_{1,t} + rK_2 but not extremal") +
                                ": " + fmt_values({{"gamma_t", gt->value}, {"n", g.order()}, {"max_degree", g.max_degree()}}));
  }
  if (shape && generate(FamilySpec::star_plus_matching(shape->t, shape->r)).order() != g.order()) {
    out.violation(instance, "recognized shape has the wrong order");
  }
  return true;
}

bool check_tree_star(const Graph& g, const std::string& instance, CellResult& out) {
  auto gt = exact_gamma_t(g);
  if (!gt) return false;
  const bool extremal = is_extremal_tree(g, gt->value);
  if (extremal != is_star(g)) {
    out.violation(instance, std::string(extremal ? "extremal tree that is not a star" : "star that is not extremal") +
                                ": " + fmt_values({{"gamma_t", gt->value}, {"n", g.order()}}));
  }
  return true;
}

CellResult check_circular(std::size_t n, std::size_t d, CircularCase expected) {
  const FamilySpec spec = FamilySpec::circular(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(d));
  GraphCheck check = [&](const Graph& g, const std::string& instance, CellResult& out) {
    const CircularValue cv = circular_gamma_t(n, d);
    if (cv.which != expected || !cv.value || !cv.witness) {
      out.violation(instance, "formula did not select the expected case");
      return true;
    }
    if (cv.witness->size() != *cv.value || !is_total_dominating(g, *cv.witness)) {
      out.violation(instance, "witness is not a total dominating set of size " + std::to_string(*cv.value));
    }
    auto gt = exact_gamma_t(g);
    if (!gt || gt->value != *cv.value) {
      out.violation(instance, "formula " + std::to_string(*cv.value) + " vs exact " +
                                  (gt ? std::to_string(gt->value) : std::string("undefined")));
    }
    return true;
  };
  return check_one(check, generate(spec), spec.to_string());
}

// Every Prüfer sequence of length n - 2 over [0, n), split into cells on the
// leading entries.
void add_pruefer_cells(std::vector<Cell>& cells, std::size_t max_n, const GraphCheck& check) {
  for (std::size_t n = 2; n <= max_n; ++n) {
    const std::size_t len = n - 2;
    const std::size_t prefix = std::min<std::size_t>(len, 2);
    std::uint64_t prefixes = 1;
    for (std::size_t i = 0; i < prefix; ++i) prefixes *= n;
    for (std::uint64_t head = 0; head < prefixes; ++head) {
      cells.push_back([=] {
        CellResult out;
        std::vector<Vertex> seq(len, 0);
        std::uint64_t h = head;
        for (std::size_t i = prefix; i-- > 0;) {
          seq[i] = static_cast<Vertex>(h % n);
          h /= n;
        }
        while (true) {
          Graph g = tree_from_pruefer(n, seq);
          CellResult one = check_one(check, g, "");
          for (auto& c : one.counterexamples) c.instance = format_edge_list(g);
          absorb(out, std::move(one));
          // Odometer over the free suffix.
          std::size_t i = len;
          while (i > prefix && ++seq[i - 1] == n) seq[--i] = 0;
          if (i == prefix) break;
        }
        return out;
      });
    }
  }
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, edges);
}

std::size_t enum_limit(Scale s) { return s == Scale::Quick ? 6 : 7; }

std::string enum_domain(std::string_view what, std::size_t max_n) {
  return "all labeled " + std::string(what) + ", 1 <= n <= " + std::to_string(max_n);
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  for (const auto& t : kTheoremNames) {
    if (t.id == id) return t.name;
  }
  return "unknown";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (const auto& t : kTheoremNames) {
    if (t.name == name) return t.id;
  }
  return std::nullopt;
}

std::vector<FamilySpec> random_graph_domain() {
  static constexpr std::uint64_t kPercents[] = {15, 25, 35, 50};
  Rng meta(kRandomGraphDomainSeed);
  std::vector<FamilySpec> out;
  for (std::size_t i = 0; i < kRandomGraphDomainSize; ++i) {
    auto n = static_cast<std::uint32_t>(4 + meta.below(13));
    Probability p{kPercents[meta.below(4)], 100};
    p = Probability::parse(p.to_string());
    out.push_back(FamilySpec::random_graph(n, p, meta.next()));
  }
  return out;
}

std::vector<FamilySpec> random_tree_domain() {
  Rng meta(kRandomTreeDomainSeed);
  std::vector<FamilySpec> out;
  for (std::size_t i = 0; i < kRandomTreeDomainSize; ++i) {
    auto n = static_cast<std::uint32_t>(2 + meta.below(15));
    out.push_back(FamilySpec::random_tree(n, meta.next()));
  }
  return out;
}

std::optional<DominationResult> exact_gamma_t(const Graph& g) { return gamma_t(g, harness_config(g)); }

DominationResult exact_gamma(const Graph& g) { return gamma(g, harness_config(g)); }

VerificationReport verify(TheoremId theorem, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Scale scale = options.scale;
  const std::size_t max_n = enum_limit(scale);
  VerificationReport report;
  report.theorem = theorem;
  std::vector<Cell> cells;

  const std::string random_note =
      " + " + std::to_string(kRandomGraphDomainSize) + " seeded random graphs, 4 <= n <= 16 (hypothesis-filtered)";

  switch (theorem) {
    case TheoremId::ThmA_CockayneUpper:
      report.domain = enum_domain("graphs without isolated vertices", max_n);
      add_enumeration_cells(cells, max_n, GraphFilter::NoIsolated, bound_check(BoundId::CockayneUpper));
      break;
    case TheoremId::Thm21_Lower:
      report.domain = enum_domain("graphs without isolated vertices", max_n);
      add_enumeration_cells(cells, max_n, GraphFilter::NoIsolated, bound_check(BoundId::NOverDeltaLower));
      break;
    case TheoremId::Sandwich_2Gamma:
      report.domain = enum_domain("graphs without isolated vertices", max_n);
      add_enumeration_cells(cells, max_n, GraphFilter::NoIsolated, check_sandwich);
      break;
    case TheoremId::ThmB_ConnectedUpper:
      report.domain = enum_domain("connected graphs with max degree < n - 1", max_n) + random_note;
      add_enumeration_cells(cells, max_n, GraphFilter::Connected, check_connected_upper);
      add_family_cells(cells, random_graph_domain(), check_connected_upper);
      break;
    case TheoremId::Thm22_Diam2:
      report.domain = enum_domain("graphs of diameter 2", max_n) + random_note;
      add_enumeration_cells(cells, max_n, GraphFilter::Connected, bound_check(BoundId::Diam2Upper));
      add_family_cells(cells, random_graph_domain(), bound_check(BoundId::Diam2Upper));
      break;
    case TheoremId::Thm23_Girth: {
      report.domain = enum_domain("graphs with girth >= 5 and min degree >= 2", max_n) + random_note +
                      " + cycles 5 <= n <= 16 + Petersen graph";
      const GraphCheck check = bound_check(BoundId::GirthUpper);
      add_enumeration_cells(cells, max_n, GraphFilter::NoIsolated, check);
      add_family_cells(cells, random_graph_domain(), check);
      std::vector<FamilySpec> cycles;
      for (std::uint32_t n = 5; n <= 16; ++n) cycles.push_back(FamilySpec::cycle(n));
      add_family_cells(cells, cycles, check);
      cells.push_back([check] {
        Graph g = petersen();
        return check_one(check, g, format_edge_list(g));
      });
      break;
    }
    case TheoremId::PathCycleFormula: {
      const std::uint32_t top = scale == Scale::Quick ? 20 : 24;
      report.domain = "paths and cycles, 3 <= n <= " + std::to_string(top);
      GraphCheck check = [](const Graph& g, const std::string& instance, CellResult& out) {
        auto gt = exact_gamma_t(g);
        const bool cyc = g.min_degree() == 2;
        std::size_t formula = path_cycle_formula(cyc ? PathOrCycle::Cycle : PathOrCycle::Path, g.order());
        if (!gt || gt->value != formula) {
          out.violation(instance, "formula " + std::to_string(formula) + " vs exact " +
                                      (gt ? std::to_string(gt->value) : std::string("undefined")));
        }
        return true;
      };
      std::vector<FamilySpec> specs;
      for (std::uint32_t n = 3; n <= top; ++n) {
        specs.push_back(FamilySpec::path(n));
        specs.push_back(FamilySpec::cycle(n));
      }
      add_family_cells(cells, specs, check);
      break;
    }
    case TheoremId::Thm31_BipartiteExtremal:
      report.domain = enum_domain("bipartite graphs without isolated vertices", max_n) + ", both directions";
      add_enumeration_cells(cells, max_n, GraphFilter::Bipartite | GraphFilter::NoIsolated, check_bipartite_extremal);
      break;
    case TheoremId::Cor_TreeStar:
      report.domain = "all Prüfer sequences, 2 <= n <= 8 + " + std::to_string(kRandomTreeDomainSize) +
                      " seeded random trees, 2 <= n <= 16";
      add_pruefer_cells(cells, 8, check_tree_star);
      add_family_cells(cells, random_tree_domain(), check_tree_star);
      break;
    case TheoremId::Thm41_Circular2:
    case TheoremId::Thm42_Circular3: {
      const std::size_t max_d = scale == Scale::Quick ? 6 : 8;
      const std::size_t top = scale == Scale::Quick ? 36 : 48;
      const bool two = theorem == TheoremId::Thm41_Circular2;
      report.domain = std::string("K_{n,d}, 3 <= d <= ") + std::to_string(max_d) +
                      (two ? ", 4d - 2 <= n <= " : ", 3d <= n <= min(4d - 3, ") + std::to_string(top) + (two ? "" : ")");
      for (std::size_t d = 3; d <= max_d; ++d) {
        const std::size_t lo = two ? 4 * d - 2 : 3 * d;
        const std::size_t hi = two ? top : std::min(4 * d - 3, top);
        for (std::size_t n = lo; n <= hi; ++n) {
          cells.push_back([=] { return check_circular(n, d, two ? CircularCase::Two : CircularCase::Three); });
        }
      }
      break;
    }
  }

  CellResult merged = run_cells(cells, options.jobs);
  report.instances = merged.instances;
  report.counterexamples = std::move(merged.counterexamples);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace tdom
