#include "tdom/families.hpp"

#include <charconv>
#include <map>
#include <numeric>
#include <vector>

#include "tdom/error.hpp"

namespace tdom {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidFamily, what); }

std::uint64_t parse_u64(std::string_view text, std::string_view key) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    invalid("parameter '" + std::string(key) + "' expects a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::uint32_t parse_u32(std::string_view text, std::string_view key) {
  std::uint64_t v = parse_u64(text, key);
  if (v > 0xffffffffULL) invalid("parameter '" + std::string(key) + "' too large");
  return static_cast<std::uint32_t>(v);
}

struct KindInfo {
  FamilyKind kind;
  std::string_view name;
  std::string_view keys;  // canonical order
};

constexpr KindInfo kKinds[] = {
    {FamilyKind::Path, "path", "n"},
    {FamilyKind::Cycle, "cycle", "n"},
    {FamilyKind::Complete, "complete", "n"},
    {FamilyKind::Star, "star", "t"},
    {FamilyKind::StarPlusMatching, "star+matching", "t,r"},
    {FamilyKind::CircularComplete, "circular", "n,d"},
    {FamilyKind::RandomGraph, "random", "n,p,seed"},
    {FamilyKind::RandomTree, "random-tree", "n,seed"},
    {FamilyKind::RandomBipartite, "random-bipartite", "n,p,seed"},
};

const KindInfo& info(FamilyKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  invalid("unknown family kind");
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = text.find(sep);
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text = text.substr(pos + 1);
  }
  return out;
}

}  // namespace

// ---- Probability ----------------------------------------------------------

Probability Probability::parse(std::string_view text) {
  Probability p;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    p.num = parse_u64(text.substr(0, slash), "p");
    p.den = parse_u64(text.substr(slash + 1), "p");
    if (p.den == 0) invalid("probability denominator must be positive");
  } else {
    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (frac.size() > 18) invalid("probability has too many decimal digits");
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::uint64_t w = whole.empty() ? 0 : parse_u64(whole, "p");
    std::uint64_t f = frac.empty() ? 0 : parse_u64(frac, "p");
    if (whole.empty() && frac.empty()) invalid("empty probability");
    if (w > 1) invalid("probability must be in [0, 1]");
    p.num = w * scale + f;
    p.den = scale;
  }
  if (p.num > p.den) invalid("probability must be in [0, 1]");
  std::uint64_t g = std::gcd(p.num, p.den);
  if (g > 1) {
    p.num /= g;
    p.den /= g;
  }
  return p;
}

std::string Probability::to_string() const {
  // Decimal form when den = 2^a 5^b, otherwise num/den.
  std::uint64_t rest = den;
  unsigned twos = 0;
  unsigned fives = 0;
  while (rest % 2 == 0) rest /= 2, ++twos;
  while (rest % 5 == 0) rest /= 5, ++fives;
  unsigned digits = std::max(twos, fives);
  if (rest != 1 || digits > 18) return std::to_string(num) + "/" + std::to_string(den);
  if (digits == 0) return std::to_string(num);
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  std::uint64_t scaled = num * (scale / den);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, digits - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return std::to_string(scaled / scale) + "." + frac;
}

// ---- FamilySpec ---------------------------------------------------------

std::string_view family_name(FamilyKind kind) { return info(kind).name; }

std::optional<FamilyKind> family_kind_from_name(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

std::vector<std::string_view> family_parameters(FamilyKind kind) { return split(info(kind).keys, ','); }

std::uint32_t FamilySpec::order() const {
  switch (kind) {
    case FamilyKind::Star: return t + 1;
    case FamilyKind::StarPlusMatching: return t + 1 + 2 * r;
    default: return n;
  }
}

FamilySpec FamilySpec::parse(std::string_view text) {
  auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  const KindInfo* kind = nullptr;
  for (const auto& k : kKinds) {
    if (k.name == name) kind = &k;
  }
  if (kind == nullptr) invalid("unknown family '" + std::string(name) + "'");

  std::map<std::string_view, std::string_view> params;
  if (colon != std::string_view::npos) {
    for (auto item : split(text.substr(colon + 1), ',')) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos) invalid("expected key=value, got '" + std::string(item) + "'");
      auto key = item.substr(0, eq);
      if (!params.emplace(key, item.substr(eq + 1)).second) invalid("duplicate key '" + std::string(key) + "'");
    }
  }

  FamilySpec spec;
  spec.kind = kind->kind;
  for (auto key : split(kind->keys, ',')) {
    auto it = params.find(key);
    if (it == params.end()) {
      invalid("family '" + std::string(name) + "' requires parameter '" + std::string(key) + "'");
    }
    if (key == "n") spec.n = parse_u32(it->second, key);
    if (key == "d") spec.d = parse_u32(it->second, key);
    if (key == "t") spec.t = parse_u32(it->second, key);
    if (key == "r") spec.r = parse_u32(it->second, key);
    if (key == "p") spec.p = Probability::parse(it->second);
    if (key == "seed") spec.seed = parse_u64(it->second, key);
    params.erase(it);
  }
  if (!params.empty()) {
    invalid("family '" + std::string(name) + "' has no parameter '" + std::string(params.begin()->first) + "'");
  }
  validate(spec);
  return spec;
}

std::string FamilySpec::to_string() const {
  const auto& k = info(kind);
  std::string out(k.name);
  char sep = ':';
  for (auto key : split(k.keys, ',')) {
    out += sep;
    out += key;
    out += '=';
    if (key == "n") out += std::to_string(n);
    if (key == "d") out += std::to_string(d);
    if (key == "t") out += std::to_string(t);
    if (key == "r") out += std::to_string(r);
    if (key == "p") out += p.to_string();
    if (key == "seed") out += std::to_string(seed);
    sep = ',';
  }
  return out;
}

void validate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Cycle:
      if (spec.n < 3) invalid("cycle requires n >= 3");
      break;
    case FamilyKind::Star:
    case FamilyKind::StarPlusMatching:
      if (spec.t < 1) invalid("star requires t >= 1");
      break;
    case FamilyKind::CircularComplete:
      if (spec.d < 1) invalid("circular complete graph requires d >= 1");
      if (spec.n < 2 * static_cast<std::uint64_t>(spec.d)) invalid("circular complete graph requires n >= 2d");
      break;
    case FamilyKind::RandomGraph:
    case FamilyKind::RandomBipartite:
      if (spec.p.den == 0 || spec.p.num > spec.p.den) invalid("probability must be in [0, 1]");
      break;
    default:
      break;
  }
  std::uint64_t order = spec.kind == FamilyKind::StarPlusMatching
                            ? std::uint64_t{spec.t} + 1 + 2 * std::uint64_t{spec.r}
                            : spec.order();
  if (order < 1 || order > kMaxVertices) {
    invalid("family '" + spec.to_string() + "' has " + std::to_string(order) + " vertices; supported range is [1, 64]");
  }
}

// ---- Generators ----------------------------------------------------------

Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence) {
  if (n < 1 || n > kMaxVertices) throw Error(ErrorCode::OutOfRange, "tree order must be in [1, 64]");
  if (n == 1) return Graph(1);
  if (sequence.size() != n - 2) throw Error(ErrorCode::InvalidArgument, "Prüfer sequence must have n-2 entries");
  std::array<std::size_t, kMaxVertices> degree;
  degree.fill(1);
  for (Vertex x : sequence) {
    if (x >= n) throw Error(ErrorCode::OutOfRange, "Prüfer entry out of range");
    ++degree[x];
  }
  VertexSet leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex x : sequence) {
    Vertex leaf = leaves.front();
    leaves.erase(leaf);
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  Vertex u = leaves.front();
  leaves.erase(u);
  edges.emplace_back(u, leaves.front());
  return Graph(n, edges);
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  const std::size_t n = spec.order();
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::Path:
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case FamilyKind::Cycle:
      for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
      break;
    case FamilyKind::Complete:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
    case FamilyKind::Star:
    case FamilyKind::StarPlusMatching:
      for (Vertex leaf = 1; leaf <= spec.t; ++leaf) edges.emplace_back(0, leaf);
      for (Vertex k = 0; k < spec.r; ++k) {
        Vertex a = spec.t + 1 + 2 * k;
        edges.emplace_back(a, a + 1);
      }
      break;
    case FamilyKind::CircularComplete:
      // Plain |i - j|; the two-sided window already encodes wraparound.
      for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
          if (j - i >= spec.d && j - i <= n - spec.d) edges.emplace_back(i, j);
        }
      }
      break;
    case FamilyKind::RandomGraph: {
      Rng rng(spec.seed);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (spec.p.draw(rng)) edges.emplace_back(u, v);
        }
      }
      break;
    }
    case FamilyKind::RandomBipartite: {
      // Sides [0, ceil(n/2)) and [ceil(n/2), n).
      Rng rng(spec.seed);
      const Vertex split_at = static_cast<Vertex>((n + 1) / 2);
      for (Vertex u = 0; u < split_at; ++u) {
        for (Vertex v = split_at; v < n; ++v) {
          if (spec.p.draw(rng)) edges.emplace_back(u, v);
        }
      }
      break;
    }
    case FamilyKind::RandomTree: {
      if (n == 1) return Graph(1);
      Rng rng(spec.seed);
      std::vector<Vertex> seq(n - 2);
      for (auto& x : seq) x = static_cast<Vertex>(rng.below(n));
      return tree_from_pruefer(n, seq);
    }
  }
  return Graph(n, edges);
}

// ---- Labeled enumeration --------------------------------------------------

bool passes(const Graph& g, GraphFilter filter) {
  if (has_flag(filter, GraphFilter::NoIsolated) && !g.isolated_vertices().empty()) return false;
  if (has_flag(filter, GraphFilter::Connected) && !is_connected(g)) return false;
  if (has_flag(filter, GraphFilter::Bipartite) && !bipartition(g)) return false;
  return true;
}

std::uint64_t labeled_graph_count(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::DomainTooLarge,
                "labeled enumeration supports 1 <= n <= 7, got n=" + std::to_string(n));
  }
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
  std::array<Edge, 21> buf;
  std::size_t count = 0;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) buf[count++] = {u, v};
    }
  }
  return Graph(n, std::span<const Edge>(buf.data(), count));
}

LabeledGraphStream::LabeledGraphStream(std::size_t n, GraphFilter filter)
    : LabeledGraphStream(n, filter, 0, labeled_graph_count(n)) {}

LabeledGraphStream::LabeledGraphStream(std::size_t n, GraphFilter filter, std::uint64_t first_mask,
                                       std::uint64_t last_mask)
    : n_(n), filter_(filter), current_(first_mask), end_(std::min(last_mask, labeled_graph_count(n))) {}

std::optional<Graph> LabeledGraphStream::next() {
  while (current_ < end_) {
    Graph g = graph_from_edge_mask(n_, current_++);
    if (passes(g, filter_)) return g;
  }
  return std::nullopt;
}

}  // namespace tdom
