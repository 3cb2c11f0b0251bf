#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "oracle.hpp"
#include "tdom/error.hpp"
#include "tdom/families.hpp"
#include "tdom/graph.hpp"

using namespace tdom;

namespace {

Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph cycle(std::size_t n) { return generate(FamilySpec::cycle(static_cast<std::uint32_t>(n))); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected tdom::Error");
  return ErrorCode::InvalidArgument;
}

// All-pairs BFS on an adjacency matrix.
std::vector<std::vector<int>> distances(const oracle::Matrix& m) {
  std::vector<std::vector<int>> d(m.n, std::vector<int>(m.n, -1));
  for (int s = 0; s < m.n; ++s) {
    std::vector<int> queue{s};
    d[s][s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      for (int v = 0; v < m.n; ++v) {
        if (m.adj[u][v] && d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return d;
}

oracle::Matrix matrix_of(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return oracle::Matrix(static_cast<int>(g.order()), edges);
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s{1, 3, 63};
  CHECK(s.size() == 3);
  CHECK(s.contains(63));
  CHECK_FALSE(s.contains(2));
  CHECK(s.front() == 1);
  CHECK(s.to_vector() == std::vector<Vertex>{1, 3, 63});
  s.erase(3);
  CHECK(s == VertexSet{1, 63});
  CHECK(VertexSet::universe(64).size() == 64);
  CHECK(VertexSet::universe(5).complement_in(5).empty());
  CHECK(VertexSet{0, 2}.subset_of(VertexSet::universe(3)));
  CHECK((VertexSet{0, 1} - VertexSet{1}) == VertexSet{0});
  CHECK_FALSE(VertexSet{0}.intersects(VertexSet{1}));
}

TEST_CASE("construction") {
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(p3.adj(1) == VertexSet{0, 2});
  CHECK(p3.edge_count() == 2);

  Graph single(1);
  CHECK(single.adj(0).empty());
  CHECK(single.isolated_vertices() == VertexSet{0});

  CHECK(code_of([] { Graph(3, {{0, 0}}); }) == ErrorCode::RejectedEdge);
  CHECK(code_of([] { Graph(3, {{0, 3}}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { Graph(0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { Graph(65); }) == ErrorCode::OutOfRange);
  CHECK(Graph(64).order() == 64);

  Graph dup(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("neighborhoods") {
  Graph c4 = cycle(4);
  CHECK(c4.neighborhood(0) == VertexSet{1, 3});
  CHECK(c4.closed_neighborhood(0) == VertexSet{0, 1, 3});

  Graph k4 = generate(FamilySpec::complete(4));
  CHECK(k4.closed_neighborhood(2) == VertexSet{0, 1, 2, 3});

  Graph iso(2);
  CHECK(iso.neighborhood(1).empty());
  CHECK(iso.closed_neighborhood(1) == VertexSet{1});

  Graph p4 = generate(FamilySpec::path(4));
  CHECK(p4.set_neighborhood(VertexSet{1, 2}) == VertexSet{0, 1, 2, 3});
  CHECK(p4.set_neighborhood(VertexSet{}).empty());
  CHECK(cycle(5).set_neighborhood(VertexSet{0}) == VertexSet{1, 4});

  CHECK(code_of([&] { c4.neighborhood(4); }) == ErrorCode::OutOfRange);
}

TEST_CASE("profile of C_5") {
  auto p = profile(cycle(5));
  CHECK(p.max_degree == 2);
  CHECK(p.min_degree == 2);
  CHECK(p.diameter == Distance::finite(2));
  CHECK(p.girth == Distance::finite(5));
  CHECK(p.connected);
  CHECK_FALSE(p.bipartition.has_value());
}

TEST_CASE("profile of a star") {
  auto p = profile(generate(FamilySpec::star(4)));
  CHECK(p.max_degree == 4);
  CHECK(p.min_degree == 1);
  CHECK(p.diameter == Distance::finite(2));
  CHECK(p.girth.is_infinite());
  REQUIRE(p.bipartition.has_value());
  CHECK(p.bipartition->a == VertexSet{0});
  CHECK(p.bipartition->b == VertexSet{1, 2, 3, 4});
}

TEST_CASE("Petersen profile against a BFS oracle") {
  Graph g = petersen();
  auto p = profile(g);
  CHECK(p.girth == Distance::finite(5));
  CHECK(p.min_degree == 3);
  CHECK(p.diameter == Distance::finite(2));

  auto d = distances(matrix_of(g));
  int diam = 0;
  for (const auto& row : d) diam = std::max(diam, *std::max_element(row.begin(), row.end()));
  CHECK(diam == 2);
}

TEST_CASE("degenerate distances") {
  Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK(diameter(two_edges).is_infinite());
  CHECK(girth(two_edges).is_infinite());
  CHECK_FALSE(is_connected(two_edges));
  CHECK(components(two_edges).size() == 2);
  CHECK(Distance::infinite().to_string() == "inf");
  CHECK(diameter(Graph(1)) == Distance::finite(0));
}

TEST_CASE("girth and diameter agree with an oracle on small labeled graphs") {
  // Girth oracle: shortest cycle through edge (u,v) is dist_{G-uv}(u,v) + 1.
  for (std::uint64_t mask = 0; mask < (1U << 15); mask += 7) {
    Graph g = graph_from_edge_mask(6, mask);
    auto m = matrix_of(g);
    int best = -1;
    for (auto [u, v] : g.edges()) {
      auto cut = m;
      cut.adj[u][v] = cut.adj[v][u] = false;
      int dd = distances(cut)[u][v];
      if (dd > 0 && (best < 0 || dd + 1 < best)) best = dd + 1;
    }
    auto gi = girth(g);
    if (best < 0) {
      CHECK(gi.is_infinite());
    } else {
      CHECK(gi == Distance::finite(static_cast<std::size_t>(best)));
    }

    auto d = distances(m);
    int diam = 0;
    bool connected = true;
    for (const auto& row : d) {
      for (int x : row) {
        if (x < 0) connected = false;
        diam = std::max(diam, x);
      }
    }
    CHECK(is_connected(g) == connected);
    if (connected) {
      CHECK(diameter(g) == Distance::finite(static_cast<std::size_t>(diam)));
    } else {
      CHECK(diameter(g).is_infinite());
    }

    // Two-colorable iff no odd closed walk; check by brute force over colorings.
    bool two_colorable = false;
    for (unsigned c = 0; c < 64 && !two_colorable; ++c) {
      bool ok = true;
      for (auto [u, v] : g.edges()) ok = ok && (((c >> u) ^ (c >> v)) & 1U) != 0;
      two_colorable = ok;
    }
    auto bp = bipartition(g);
    CHECK(bp.has_value() == two_colorable);
    if (bp) {
      CHECK((bp->a | bp->b) == g.vertices());
      CHECK_FALSE(bp->a.intersects(bp->b));
      for (auto [u, v] : g.edges()) CHECK(bp->a.contains(u) != bp->a.contains(v));
    }
  }
}

TEST_CASE("relabeling preserves the profile") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = generate(FamilySpec::random_graph(12, Probability::parse("0.3"), 1000 + trial));
    std::vector<Vertex> perm(12);
    std::iota(perm.begin(), perm.end(), 0U);
    for (std::size_t i = perm.size() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    Graph h = g.relabeled(perm);
    auto a = profile(g);
    auto b = profile(h);
    CHECK(h.edge_count() == g.edge_count());
    CHECK(a.max_degree == b.max_degree);
    CHECK(a.min_degree == b.min_degree);
    CHECK(a.connected == b.connected);
    CHECK(a.diameter == b.diameter);
    CHECK(a.girth == b.girth);
    CHECK(a.isolated.size() == b.isolated.size());
    CHECK(a.bipartition.has_value() == b.bipartition.has_value());
  }
  Graph p3(3, {{0, 1}, {1, 2}});
  const std::vector<Vertex> bad{0, 0, 1};
  CHECK(code_of([&] { p3.relabeled(bad); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("edge list round trip") {
  Graph g = petersen();
  std::string text = format_edge_list(g);
  CHECK(text.rfind("10 15\n", 0) == 0);
  CHECK(parse_edge_list(text) == g);

  Graph h = parse_edge_list("# comment\n\n3 2\n0 1  # trailing\n1 2\n");
  CHECK(h == Graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("edge list errors name the line") {
  auto message = [](std::string_view text) {
    try {
      parse_edge_list(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      return std::string(e.what());
    }
    FAIL("no error");
    return std::string();
  };
  CHECK(message("3 2\n0 1\nx y\n").find("line 3") != std::string::npos);
  CHECK(message("3 1\n0 0\n").find("line 2") != std::string::npos);
  CHECK(message("3 1\n0 5\n").find("line 2") != std::string::npos);
  CHECK(message("3 2\n0 1\n").find("declared 2 edges, found 1") != std::string::npos);
  CHECK(message("").size() > 0);
  CHECK(code_of([] { read_edge_list_file("/nonexistent/graph.txt"); }) == ErrorCode::IoError);
}
