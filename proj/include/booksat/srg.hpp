#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "booksat/graph.hpp"
#include "booksat/saturation.hpp"

namespace booksat {

struct SrgParams {
  int n, k, lambda, mu;
  bool operator==(const SrgParams&) const = default;
};

// Parameters (n, k, lambda, mu) when g is regular with constant
// common-neighbor counts over adjacent and over non-adjacent pairs, and is
// neither complete nor edgeless; absent otherwise. Disconnected graphs with
// constant statistics qualify.
std::optional<SrgParams> srg_params(const Graph& g);

// Vertices at distance exactly `radius` from the set; throws on empty set.
Bits128 neighborhood_shell(const Graph& g, Bits128 u_set, int radius);

// Both sides of the equivalence "nontrivial uniquely diamond-saturated with
// girth 4 <=> strongly regular (n, k, 0, 2)", evaluated independently.
struct Girth4SrgReport {
  bool unique_saturated = false;
  ExtendedDistance girth_value;
  bool lhs = false;
  std::optional<SrgParams> params;
  bool rhs = false;
  bool agree = false;
};
Girth4SrgReport girth4_srg_equivalence(const Graph& g);

// Structure around one triangle S = {v1, v2, v3}: V_i = N(v_i) - S, the
// distance shells of S, and the clause-by-clause report of the structure
// forced on uniquely diamond-saturated hosts (diagnostic on anything else).
struct DecompositionClauses {
  bool shells_cover = false;       // V(G) = S u N(S) u N2(S)
  bool v_sets_disjoint = false;    // V_i n V_j empty
  bool shell1_independent = false; // N(S) has no internal edge
  bool shell2_degrees = false;     // each N2(S) vertex has 1 or 2 neighbors per V_i
  bool all() const {
    return shells_cover && v_sets_disjoint && shell1_independent && shell2_degrees;
  }
};

struct TriangleDecomposition {
  std::array<int, 3> s;
  std::array<Bits128, 3> v_sets;
  Bits128 shell1, shell2;                      // N(S), N2(S)
  std::array<std::array<Bits128, 2>, 3> n_ij;  // n_ij[i][j-1]: shell2 vertices with j neighbors in V_i
  DecompositionClauses clauses;
};

// Throws if s does not span a triangle.
TriangleDecomposition decompose_triangle(const Graph& g, std::array<int, 3> s);

// A = union of all triangle vertex sets, its shells, and the parameter
// t = min over u in N(A) of (#triangles - |N(u) n A|).
struct TriangleCover {
  Bits128 a;
  Bits128 shell1, shell2;  // N(A), N2(A)
  std::vector<std::pair<int, int>> a_neighbor_counts;  // (u, |N(u) n A|), u in N(A)
  uint64_t triangle_count = 0;
  std::optional<int> t_param;
};
TriangleCover triangle_cover(const Graph& g);

// Order forced on a uniquely diamond-saturated graph whose triangle set has
// a nonempty second shell, as a function of the outside degree t:
// t(t+1)/2 + 1.
uint64_t order_with_far_vertices(uint64_t t);

// Upper bound on the order of a uniquely diamond-saturated graph with
// k >= 2 triangles and cover parameter t in [0, k-1]:
// k^2/2 + (10t+5)k/2 + (25t^2+7t)/2 + 1.
uint64_t order_bound(uint64_t k, uint64_t t);

// The t = k-1 worst case of order_bound: 18k^2 - 24k + 10.
uint64_t order_bound_max(uint64_t k);

// Degree uniformity outside the triangle set, applicable when N2(A) is
// nonempty. Theory says the applicable case never occurs on uniquely
// diamond-saturated graphs; the check documents that vacuity.
struct OutsideDegreeReport {
  bool applicable = false;  // N2(A) nonempty
  bool uniform = true;      // all vertices outside A share one degree
  std::optional<int> degree;
};
OutsideDegreeReport outside_degree_uniformity(const Graph& g);

}  // namespace booksat
