// Brute-force reference implementations used as test oracles. These share no
// code with the library: plain adjacency matrices and subset bitmasks.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

struct Matrix {
  int n = 0;
  std::vector<std::vector<bool>> adj;

  Matrix(int order, const std::vector<std::pair<int, int>>& edges)
      : n(order), adj(order, std::vector<bool>(order, false)) {
    for (auto [u, v] : edges) {
      adj[u][v] = true;
      adj[v][u] = true;
    }
  }

  int degree(int v) const {
    int d = 0;
    for (int u = 0; u < n; ++u) d += adj[v][u] ? 1 : 0;
    return d;
  }
};

inline bool totally_dominates(const Matrix& m, std::uint64_t s) {
  for (int v = 0; v < m.n; ++v) {
    bool hit = false;
    for (int u = 0; u < m.n && !hit; ++u) hit = ((s >> u) & 1U) != 0 && m.adj[v][u];
    if (!hit) return false;
  }
  return true;
}

inline bool dominates(const Matrix& m, std::uint64_t s) {
  for (int v = 0; v < m.n; ++v) {
    bool hit = ((s >> v) & 1U) != 0;
    for (int u = 0; u < m.n && !hit; ++u) hit = ((s >> u) & 1U) != 0 && m.adj[v][u];
    if (!hit) return false;
  }
  return true;
}

// Smallest popcount over all 2^n subsets. Only for n <= ~20.
template <typename Pred>
std::optional<int> min_subset(const Matrix& m, Pred ok) {
  int best = -1;
  const std::uint64_t limit = std::uint64_t{1} << m.n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    const int c = std::popcount(s);
    if ((best < 0 || c < best) && ok(m, s)) best = c;
  }
  if (best < 0) return std::nullopt;
  return best;
}

inline std::optional<int> gamma_t(const Matrix& m) { return min_subset(m, totally_dominates); }
inline int gamma(const Matrix& m) { return *min_subset(m, dominates); }

// Closed form for paths and cycles, n >= 3.
inline int path_cycle(int n) { return n / 2 + (n + 3) / 4 - n / 4; }

// Edges of the labeled graph with the given mask, pairs in (0,1),(0,2),... order.
inline std::vector<std::pair<int, int>> mask_edges(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> out;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (((mask >> bit) & 1U) != 0) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace oracle
