#include "tdom/bounds.hpp"

#include "tdom/error.hpp"

namespace tdom {

std::string_view bound_key(BoundId id) {
  switch (id) {
    case BoundId::CockayneUpper: return "cockayne_upper";
    case BoundId::ConnectedUpper: return "connected_upper";
    case BoundId::NOverDeltaLower: return "n_over_delta_lower";
    case BoundId::Diam2Upper: return "diam2_upper";
    case BoundId::GirthUpper: return "girth_upper";
  }
  return "unknown";
}

bool is_lower_bound(BoundId id) { return id == BoundId::NOverDeltaLower; }

bool BoundReport::violated_by(std::size_t exact) const {
  if (!applicable) return false;
  return is_lower_bound(bound) ? *value > exact : *value < exact;
}

BoundReport evaluate_bound(BoundId id, const Graph& g, const StructuralProfile& prof,
                           std::optional<std::size_t> exact) {
  const std::size_t n = g.order();
  const std::size_t max_deg = prof.max_degree;
  BoundReport rep;
  rep.bound = id;
  switch (id) {
    case BoundId::CockayneUpper:
      if (prof.isolated.empty()) rep.value = n - max_deg + 1;
      break;
    case BoundId::ConnectedUpper:
      if (prof.connected && n >= 2 && max_deg < n - 1) rep.value = n - max_deg;
      break;
    case BoundId::NOverDeltaLower:
      // Gated on "no isolated vertex": the counting argument needs nothing more.
      if (prof.isolated.empty()) rep.value = (n + max_deg - 1) / max_deg;
      break;
    case BoundId::Diam2Upper:
      if (prof.diameter == Distance::finite(2)) rep.value = prof.min_degree + 1;
      break;
    case BoundId::GirthUpper:
      if (prof.girth.is_finite() && prof.girth.value() >= 5 && prof.min_degree >= 2) {
        rep.value = n - (prof.girth.value() + 1) / 2 + 1;
      }
      break;
  }
  rep.applicable = rep.value.has_value();
  if (rep.applicable && exact) rep.tight = *rep.value == *exact;
  return rep;
}

std::vector<BoundReport> all_bounds(const Graph& g, const StructuralProfile& prof, std::optional<std::size_t> exact) {
  std::vector<BoundReport> out;
  for (BoundId id : kAllBounds) out.push_back(evaluate_bound(id, g, prof, exact));
  return out;
}

std::vector<BoundReport> all_bounds(const Graph& g, std::optional<std::size_t> exact) {
  return all_bounds(g, profile(g), exact);
}

std::size_t path_cycle_formula(PathOrCycle, std::size_t n) {
  if (n < 3) throw Error(ErrorCode::OutOfDomain, "closed form holds for n >= 3, got n=" + std::to_string(n));
  return n % 4 == 0 ? n / 2 : n / 2 + 1;
}

CircularValue circular_gamma_t(std::size_t n, std::size_t d) {
  if (d < 1 || n < 2 * d) {
    throw Error(ErrorCode::InvalidFamily,
                "K_{n,d} requires d >= 1 and n >= 2d, got n=" + std::to_string(n) + ", d=" + std::to_string(d));
  }
  CircularValue out;
  out.n = n;
  out.d = d;
  if (d == 1) {
    out.which = CircularCase::Complete;
    out.value = 2;
    out.witness = VertexSet{0, 1};
  } else if (d == 2) {
    // The adjacency rule gives degree n - 3, so K_{n,2} is a cycle only at
    // n = 5. Other orders stay Unknown.
    if (n == 5) {
      out.which = CircularCase::Cycle;
      out.value = path_cycle_formula(PathOrCycle::Cycle, n);
    }
  } else if (n >= 4 * d - 2) {
    out.which = CircularCase::Two;
    out.value = 2;
    out.witness = VertexSet{0, static_cast<Vertex>(2 * d - 1)};
  } else if (n >= 3 * d) {
    out.which = CircularCase::Three;
    out.value = 3;
    out.witness = VertexSet{0, static_cast<Vertex>(d), static_cast<Vertex>(2 * d - 1)};
  }
  return out;
}

bool is_star(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.edge_count() != n - 1) return false;
  return g.max_degree() == n - 1;
}

std::optional<StarMatchingShape> recognize_star_plus_matching(const Graph& g) {
  if (!g.isolated_vertices().empty()) return std::nullopt;
  std::size_t edges_only = 0;
  std::optional<std::size_t> star_leaves;
  for (VertexSet comp : components(g)) {
    if (comp.size() == 2) {
      ++edges_only;
      continue;
    }
    // A star on >= 3 vertices: one center adjacent to all, leaves of degree 1.
    std::size_t edges = 0;
    bool has_center = false;
    for (Vertex v : comp) {
      edges += g.adj(v).size();
      if (g.adj(v).size() + 1 == comp.size()) has_center = true;
    }
    edges /= 2;
    if (!has_center || edges + 1 != comp.size() || star_leaves) return std::nullopt;
    star_leaves = comp.size() - 1;
  }
  if (star_leaves) return StarMatchingShape{*star_leaves, edges_only};
  return StarMatchingShape{1, edges_only - 1};
}

bool achieves_extremal(const Graph& g, std::size_t exact) {
  if (!g.isolated_vertices().empty()) {
    throw Error(ErrorCode::Undefined, "total domination is undefined on a graph with an isolated vertex");
  }
  return exact == g.order() - g.max_degree() + 1;
}

bool is_extremal_tree(const Graph& g, std::size_t exact) {
  if (!is_tree(g)) throw Error(ErrorCode::NotATree, "input graph is not a tree");
  return achieves_extremal(g, exact);
}

}  // namespace tdom
