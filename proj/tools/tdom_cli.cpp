// tdom command-line frontend. Talks to the library exclusively through the C
// API in tdom/tdom.h.
//
// Exit codes: 0 success / all PASS, 1 counterexample or cross-check
// mismatch, 2 usage or input error, 3 resource limit hit.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tdom/tdom.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;

struct GraphDeleter {
  void operator()(tdom_graph* g) const { tdom_graph_free(g); }
};
struct TextDeleter {
  void operator()(tdom_text* t) const { tdom_text_free(t); }
};
using GraphPtr = std::unique_ptr<tdom_graph, GraphDeleter>;
using TextPtr = std::unique_ptr<tdom_text, TextDeleter>;

int exit_code_for(tdom_status status) {
  switch (status) {
    case TDOM_OK: return kExitOk;
    case TDOM_RESOURCE_EXHAUSTED: return kExitExhausted;
    case TDOM_SOLVER_MISMATCH: return kExitCounterexample;
    default: return kExitUsage;
  }
}

int report_failure(tdom_status status) {
  std::cerr << "tdom: " << tdom_status_name(status) << ": " << tdom_last_error() << "\n";
  return exit_code_for(status);
}

void write_stdout(const tdom_text* text) {
  std::fwrite(tdom_text_data(text), 1, tdom_text_size(text), stdout);
  std::fflush(stdout);
}

struct InputOptions {
  std::string input;
  std::string family;
};

struct SolverOptions {
  std::string strategy = "bnb";
  std::uint64_t node_limit = 0;
  std::uint64_t time_limit_ms = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* input = cmd->add_option("--input", in.input, "Edge-list file ('-' for stdin)");
  auto* family = cmd->add_option("--family", in.family, "Family spec, e.g. circular:n=10,d=3");
  input->excludes(family);
  family->excludes(input);
}

void add_solver_options(CLI::App* cmd, SolverOptions& s) {
  cmd->add_option("--strategy", s.strategy, "Solver: bnb or exhaustive")
      ->check(CLI::IsMember({"bnb", "exhaustive"}))
      ->capture_default_str();
  cmd->add_option("--node-limit", s.node_limit, "Abort after this many search nodes (0 = none)");
  cmd->add_option("--time-limit", s.time_limit_ms, "Abort after this many milliseconds (0 = none)");
}

tdom_solver_config to_config(const SolverOptions& s) {
  tdom_solver_config cfg{};
  cfg.strategy = s.strategy == "exhaustive" ? TDOM_STRATEGY_EXHAUSTIVE : TDOM_STRATEGY_BRANCH_AND_BOUND;
  cfg.node_limit = s.node_limit;
  cfg.time_limit_ms = s.time_limit_ms;
  return cfg;
}

// Loads the single input graph; returns an exit code on failure.
std::optional<int> load_graph(const InputOptions& in, GraphPtr& out) {
  if (in.input.empty() == in.family.empty()) {
    std::cerr << "tdom: exactly one of --input or --family is required\n";
    return kExitUsage;
  }
  tdom_graph* g = nullptr;
  tdom_status st;
  if (!in.family.empty()) {
    st = tdom_graph_from_family(in.family.c_str(), &g);
  } else if (in.input == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    st = tdom_graph_parse(text.data(), text.size(), &g);
  } else {
    st = tdom_graph_load(in.input.c_str(), &g);
  }
  if (st != TDOM_OK) return report_failure(st);
  out.reset(g);
  return std::nullopt;
}

unsigned format_flag(const std::string& format) { return format == "text" ? static_cast<unsigned>(TDOM_FORMAT_TEXT) : 0U; }

// Reads key=value lines ('#' comments) and splices them in as flags for the
// chosen subcommand. Flags given on the command line win.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end()) return args;
  if (std::next(it) == args.end()) throw CLI::ValidationError("--config", "requires a path");
  const std::string path = *std::next(it);
  args.erase(it, std::next(it, 2));

  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot read '" + path + "'");
  std::set<std::string> given;
  for (const auto& a : args) {
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  }
  std::vector<std::string> extra;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    std::string key = trim(line.substr(0, eq));
    std::string value = eq == std::string::npos ? "true" : trim(line.substr(eq + 1));
    if (key.empty()) throw CLI::ValidationError("--config", path + ":" + std::to_string(line_no) + ": empty key");
    if (given.count(key) != 0) continue;
    if (value == "true") {
      extra.push_back("--" + key);
    } else if (value != "false") {
      extra.push_back("--" + key);
      extra.push_back(value);
    }
  }
  // Config flags follow the subcommand name so they bind to it.
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domination and total domination numbers, bounds, and theorem verification", "tdom"};
  app.require_subcommand(1);
  app.add_option("--config", "File of key=value lines mirroring the command-line flags");
  app.set_version_flag("--version", std::string(tdom_version()));

  InputOptions in;
  SolverOptions solver;
  std::string format = "json";
  bool paranoid = false;
  bool stats = false;
  bool no_exact = false;
  std::string output;
  std::string theorem = "all";
  std::string scale = "quick";
  std::string verify_format = "text";
  unsigned jobs = 1;
  std::string columns;
  std::string sweep_range;

  auto* compute = app.add_subcommand("compute", "Exact gamma and gamma_t with witnesses");
  add_input_options(compute, in);
  add_solver_options(compute, solver);
  compute->add_flag("--paranoid", paranoid, "Cross-check against exhaustive search");
  compute->add_flag("--stats", stats, "Include elapsed_ms timing");
  compute->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* bounds = app.add_subcommand("bounds", "Every bound with applicability and tightness");
  add_input_options(bounds, in);
  add_solver_options(bounds, solver);
  bounds->add_flag("--no-exact", no_exact, "Skip the exact gamma_t (no tightness flags)");
  bounds->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* family = app.add_subcommand("family", "Write a generated graph as an edge list");
  family->add_option("--family", in.family, "Family spec")->required();
  family->add_option("--output", output, "Write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run theorem checks over their domains");
  verify->add_option("--theorem", theorem, "Theorem id or 'all'")->capture_default_str();
  verify->add_option("--scale", scale, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--stats", stats, "Include elapsed_ms timing");
  verify->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"json", "text"}));

  auto* sweep = app.add_subcommand("sweep", "Tabulate a family range as CSV");
  sweep->add_option("--family", sweep_range, "Range spec, e.g. circular:n=6..14,d=3")->required();
  sweep->add_option("--columns", columns, "Comma-separated subset of columns");
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_solver_options(sweep, solver);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = apply_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitUsage;
  }

  const tdom_solver_config cfg = to_config(solver);
  tdom_text* raw = nullptr;

  if (*compute || *bounds) {
    GraphPtr g;
    if (auto code = load_graph(in, g)) return *code;
    unsigned flags = format_flag(format);
    tdom_status st;
    if (*compute) {
      if (paranoid) flags |= TDOM_CROSS_CHECK;
      if (stats) flags |= TDOM_WITH_TIMING;
      st = tdom_compute_report(g.get(), &cfg, flags, &raw);
    } else {
      if (no_exact) flags |= TDOM_NO_EXACT;
      st = tdom_bounds_report(g.get(), &cfg, flags, &raw);
    }
    if (st != TDOM_OK) return report_failure(st);
    TextPtr text(raw);
    write_stdout(text.get());
    return kExitOk;
  }

  if (*family) {
    GraphPtr g;
    if (auto code = load_graph(in, g)) return *code;
    tdom_status st = tdom_graph_to_edge_list(g.get(), &raw);
    if (st != TDOM_OK) return report_failure(st);
    TextPtr text(raw);
    if (output.empty()) {
      write_stdout(text.get());
    } else {
      std::ofstream out(output, std::ios::binary);
      out.write(tdom_text_data(text.get()), static_cast<std::streamsize>(tdom_text_size(text.get())));
      if (!out) {
        std::cerr << "tdom: cannot write '" << output << "'\n";
        return kExitUsage;
      }
    }
    return kExitOk;
  }

  if (*verify) {
    unsigned flags = format_flag(verify_format) | (stats ? static_cast<unsigned>(TDOM_WITH_TIMING) : 0U);
    int passed = 0;
    tdom_status st = tdom_verify_report(theorem.c_str(), scale == "full" ? TDOM_SCALE_FULL : TDOM_SCALE_QUICK, jobs,
                                        flags, &raw, &passed);
    if (st != TDOM_OK) return report_failure(st);
    TextPtr text(raw);
    write_stdout(text.get());
    return passed != 0 ? kExitOk : kExitCounterexample;
  }

  // sweep
  tdom_status st = tdom_sweep_csv(sweep_range.c_str(), columns.empty() ? nullptr : columns.c_str(), &cfg, jobs, &raw);
  if (st != TDOM_OK) return report_failure(st);
  TextPtr text(raw);
  write_stdout(text.get());
  return kExitOk;
}
