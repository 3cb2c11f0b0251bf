#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

#include "tdom/error.hpp"
#include "tdom/verify.hpp"

namespace tdom {

namespace {

struct IntRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

std::uint64_t parse_bound(std::string_view text, std::string_view key) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidFamily, "range for '" + std::string(key) + "' must be 'a' or 'a..b'");
  }
  return v;
}

IntRange parse_range(std::string_view text, std::string_view key) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    std::uint64_t v = parse_bound(text, key);
    return {v, v};
  }
  IntRange r{parse_bound(text.substr(0, dots), key), parse_bound(text.substr(dots + 2), key)};
  if (r.lo > r.hi) throw Error(ErrorCode::InvalidFamily, "empty range for '" + std::string(key) + "'");
  return r;
}

}  // namespace

std::vector<FamilySpec> expand_sweep(std::string_view range_spec) {
  auto colon = range_spec.find(':');
  std::string_view name = range_spec.substr(0, colon);
  std::vector<std::pair<std::string, std::string>> given;
  if (colon != std::string_view::npos) {
    std::string_view rest = range_spec.substr(colon + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw Error(ErrorCode::InvalidFamily, "expected key=value in sweep range");
      given.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }

  const auto kind = family_kind_from_name(name);
  if (!kind) throw Error(ErrorCode::InvalidFamily, "unknown family '" + std::string(name) + "'");
  const auto keys = family_parameters(*kind);
  for (const auto& [k, v] : given) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw Error(ErrorCode::InvalidFamily, "family '" + std::string(name) + "' has no parameter '" + k + "'");
    }
  }

  // Slowest axis first, in the family's canonical key order.
  std::vector<std::pair<std::string, IntRange>> axes;
  std::string fixed_p;
  for (auto key : keys) {
    auto it = std::find_if(given.begin(), given.end(), [&](const auto& kv) { return kv.first == key; });
    if (it == given.end()) {
      throw Error(ErrorCode::InvalidFamily,
                  "family '" + std::string(name) + "' requires parameter '" + std::string(key) + "'");
    }
    if (key == "p") {
      fixed_p = it->second;
    } else {
      axes.emplace_back(it->first, parse_range(it->second, key));
    }
  }

  std::uint64_t total = 1;
  for (const auto& [k, r] : axes) {
    total *= r.hi - r.lo + 1;
    if (total > kMaxSweepInstances) {
      throw Error(ErrorCode::DomainTooLarge,
                  "sweep exceeds the budget of " + std::to_string(kMaxSweepInstances) + " instances");
    }
  }

  std::vector<FamilySpec> out;
  std::vector<std::uint64_t> cur;
  for (const auto& [k, r] : axes) cur.push_back(r.lo);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::string text(name);
    char s = ':';
    for (std::size_t a = 0; a < axes.size(); ++a) {
      text += s + axes[a].first + "=" + std::to_string(cur[a]);
      s = ',';
    }
    if (!fixed_p.empty()) text += std::string(1, s) + "p=" + fixed_p;
    try {
      out.push_back(FamilySpec::parse(text));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidFamily) throw;
    }
    for (std::size_t a = axes.size(); a-- > 0;) {
      if (++cur[a] <= axes[a].second.hi) break;
      cur[a] = axes[a].second.lo;
    }
  }
  return out;
}

std::vector<SweepRow> sweep(const std::vector<FamilySpec>& specs, const SolverConfig& cfg, unsigned jobs) {
  if (specs.size() > kMaxSweepInstances) {
    throw Error(ErrorCode::DomainTooLarge,
                "sweep exceeds the budget of " + std::to_string(kMaxSweepInstances) + " instances");
  }
  std::vector<SweepRow> rows(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size() && !failed; i = next++) {
      try {
        SweepRow& row = rows[i];
        row.spec = specs[i];
        const Graph g = generate(specs[i]);
        row.n = g.order();
        row.gamma = gamma(g, cfg).value;
        if (auto gt = gamma_t(g, cfg)) {
          row.gamma_t = gt->value;
          row.extremal = achieves_extremal(g, gt->value);
        }
        row.bounds = all_bounds(g, row.gamma_t);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(specs.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> columns = [] {
    std::vector<std::string> c = {"spec", "n", "d", "t", "r", "gamma", "gamma_t"};
    for (BoundId id : kAllBounds) c.emplace_back(bound_key(id));
    for (BoundId id : kAllBounds) c.push_back(std::string(bound_key(id)) + "_tight");
    c.emplace_back("extremal");
    return c;
  }();
  return columns;
}

namespace {

std::string opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }
std::string opt(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }

std::string cell(const SweepRow& row, const std::string& column) {
  const FamilyKind kind = row.spec.kind;
  if (column == "spec") return "\"" + row.spec.to_string() + "\"";
  if (column == "n") return std::to_string(row.n);
  if (column == "d") return kind == FamilyKind::CircularComplete ? std::to_string(row.spec.d) : "";
  if (column == "t" || column == "r") {
    if (kind != FamilyKind::Star && kind != FamilyKind::StarPlusMatching) return "";
    if (column == "r" && kind == FamilyKind::Star) return "";
    return std::to_string(column == "t" ? row.spec.t : row.spec.r);
  }
  if (column == "gamma") return std::to_string(row.gamma);
  if (column == "gamma_t") return opt(row.gamma_t);
  if (column == "extremal") return opt(row.extremal);
  for (const auto& b : row.bounds) {
    const std::string key(bound_key(b.bound));
    if (column == key) return opt(b.value);
    if (column == key + "_tight") return opt(b.tight);
  }
  return "";
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::vector<std::string>& columns) {
  const std::vector<std::string>& cols = columns.empty() ? sweep_columns() : columns;
  for (const auto& c : cols) {
    if (std::find(sweep_columns().begin(), sweep_columns().end(), c) == sweep_columns().end()) {
      throw Error(ErrorCode::InvalidArgument, "unknown sweep column '" + c + "'");
    }
  }
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cell(row, cols[i]);
    out += "\n";
  }
  return out;
}

}  // namespace tdom
