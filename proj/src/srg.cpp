#include "booksat/srg.hpp"

#include <limits>
#include <stdexcept>

#include "booksat/named.hpp"
#include "booksat/pattern.hpp"

namespace booksat {

std::optional<SrgParams> srg_params(const Graph& g) {
  int n = g.n();
  if (n == 0) return std::nullopt;
  int k = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  long edges = static_cast<long>(n) * k / 2;
  if (edges == 0 || edges == static_cast<long>(n) * (n - 1) / 2)
    return std::nullopt;  // edgeless or complete
  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int c = intersection_count(g.neighbors(u), g.neighbors(v));
      int& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot < 0) slot = c;
      else if (slot != c) return std::nullopt;
    }
  return SrgParams{n, k, lambda, mu};
}

Bits128 neighborhood_shell(const Graph& g, Bits128 u_set, int radius) {
  u_set &= g.vertex_mask();
  if (u_set.empty()) throw std::invalid_argument("neighborhood_shell of an empty set");
  if (radius < 0) throw std::invalid_argument("negative shell radius");
  auto dist = bfs_distances(g, u_set);
  Bits128 out;
  for (int v = 0; v < g.n(); ++v)
    if (dist[v] == radius) out.set(v);
  return out;
}

Girth4SrgReport girth4_srg_equivalence(const Graph& g) {
  static const Pattern diamond{book_graph(2)};
  Girth4SrgReport report;
  report.unique_saturated = nontrivial_uniquely_saturated(g, diamond);
  report.girth_value = girth(g);
  report.lhs = report.unique_saturated && report.girth_value == 4;
  report.params = srg_params(g);
  report.rhs = report.params && report.params->lambda == 0 && report.params->mu == 2;
  report.agree = report.lhs == report.rhs;
  return report;
}

TriangleDecomposition decompose_triangle(const Graph& g, std::array<int, 3> s) {
  for (int v : s) g.require_vertex(v);
  if (!(g.adjacent(s[0], s[1]) && g.adjacent(s[0], s[2]) && g.adjacent(s[1], s[2])))
    throw std::invalid_argument("vertex triple does not span a triangle");

  TriangleDecomposition d;
  d.s = s;
  Bits128 s_mask;
  for (int v : s) s_mask.set(v);
  for (int i = 0; i < 3; ++i) d.v_sets[i] = g.neighbors(s[i]).minus(s_mask);

  auto dist = bfs_distances(g, s_mask);
  bool covered = true;
  for (int v = 0; v < g.n(); ++v) {
    if (dist[v] == 1) d.shell1.set(v);
    else if (dist[v] == 2) d.shell2.set(v);
    else if (dist[v] != 0) covered = false;
  }
  d.clauses.shells_cover = covered;

  d.clauses.v_sets_disjoint = !(d.v_sets[0] & d.v_sets[1]).any() &&
                              !(d.v_sets[0] & d.v_sets[2]).any() &&
                              !(d.v_sets[1] & d.v_sets[2]).any();

  bool independent = true;
  d.shell1.for_each([&](int u) {
    if ((g.neighbors(u) & d.shell1).any()) independent = false;
  });
  d.clauses.shell1_independent = independent;

  bool degrees_ok = true;
  d.shell2.for_each([&](int u) {
    for (int i = 0; i < 3; ++i) {
      int c = intersection_count(g.neighbors(u), d.v_sets[i]);
      if (c == 1 || c == 2) d.n_ij[i][c - 1].set(u);
      else degrees_ok = false;
    }
  });
  d.clauses.shell2_degrees = degrees_ok;
  return d;
}

TriangleCover triangle_cover(const Graph& g) {
  TriangleCover cover;
  for (const auto& t : triangle_list(g)) {
    ++cover.triangle_count;
    for (int v : t) cover.a.set(v);
  }
  if (!cover.a.any()) return cover;  // triangle-free: empty cover, shells stay empty

  cover.shell1 = neighborhood_shell(g, cover.a, 1);
  cover.shell2 = neighborhood_shell(g, cover.a, 2);
  cover.shell1.for_each([&](int u) {
    cover.a_neighbor_counts.emplace_back(u, intersection_count(g.neighbors(u), cover.a));
  });
  if (!cover.a_neighbor_counts.empty()) {
    int best = std::numeric_limits<int>::max();
    for (auto [u, c] : cover.a_neighbor_counts)
      best = std::min(best, static_cast<int>(cover.triangle_count) - c);
    cover.t_param = best;
  }
  return cover;
}

uint64_t order_with_far_vertices(uint64_t t) { return t * (t + 1) / 2 + 1; }

uint64_t order_bound(uint64_t k, uint64_t t) {
  if (k < 2) throw std::invalid_argument("order_bound needs k >= 2");
  if (t > k - 1) throw std::invalid_argument("order_bound needs 0 <= t <= k-1");
  // (k^2 + (10t+5)k + 25t^2 + 7t + 2) / 2, always an even numerator.
  return (k * k + (10 * t + 5) * k + 25 * t * t + 7 * t + 2) / 2;
}

uint64_t order_bound_max(uint64_t k) { return order_bound(k, k - 1); }

OutsideDegreeReport outside_degree_uniformity(const Graph& g) {
  TriangleCover cover = triangle_cover(g);
  OutsideDegreeReport report;
  report.applicable = cover.a.any() && cover.shell2.any();
  Bits128 outside = g.vertex_mask().minus(cover.a);
  outside.for_each([&](int v) {
    if (!report.degree) report.degree = g.degree(v);
    else if (*report.degree != g.degree(v)) report.uniform = false;
  });
  return report;
}

}  // namespace booksat
