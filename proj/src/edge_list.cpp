#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "tdom/error.hpp"
#include "tdom/graph.hpp"

namespace tdom {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

std::uint64_t to_number(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;

  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) fail(line_no, "expected two fields, got " + std::to_string(toks.size()));

    std::uint64_t a = to_number(toks[0], line_no);
    std::uint64_t b = to_number(toks[1], line_no);
    if (!have_header) {
      if (a == 0 || a > kMaxVertices) fail(line_no, "vertex count must be in [1, 64]");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (edges.size() == m) fail(line_no, "more edge lines than the declared " + std::to_string(m));
    if (a >= n || b >= n) fail(line_no, "endpoint out of range for n=" + std::to_string(n));
    if (a == b) fail(line_no, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) fail(line_no, "missing 'n m' header");
  if (edges.size() != m) {
    fail(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string format_edge_list(const Graph& g) {
  auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace tdom
