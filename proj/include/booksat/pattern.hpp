#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "booksat/graph.hpp"

namespace booksat {

// Order of Aut(h) by exhaustive permutation check; |h| <= 10.
uint64_t aut_count(const Graph& h);

// Injective maps V(h) -> V(g) sending every edge of h to an edge of g
// (subgraph containment: non-edges of h are unconstrained). |h| <= 10.
uint64_t count_monomorphisms(const Graph& g, const Graph& h);

// Pattern graph plus the automorphism count that converts monomorphism
// counts into copy counts. Detects book patterns so saturation checks can
// take the common-neighbor fast path; books are the one pattern family
// allowed past the 10-vertex cap, since all their counts have closed forms.
class Pattern {
 public:
  explicit Pattern(Graph h);

  const Graph& graph() const { return graph_; }
  uint64_t automorphisms() const { return aut_; }
  // Set iff the pattern is isomorphic to the book B_p; holds p.
  std::optional<int> book_pages() const { return book_pages_; }

 private:
  Graph graph_;
  uint64_t aut_;
  std::optional<int> book_pages_;
};

// Copies of h in g: subgraphs of g isomorphic to h, distinguished by their
// edge sets. Equals monomorphisms / |Aut(h)|, always an exact division.
uint64_t count_subgraph_copies(const Graph& g, const Pattern& h);

// Early-exit containment test.
bool contains(const Graph& g, const Pattern& h);

uint64_t count_triangles(const Graph& g);
std::vector<std::array<int, 3>> triangle_list(const Graph& g);

// Copies of the book B_p via the rootlet formula: sum over edges uv of
// C(|N(u) n N(v)|, p). For p = 1 each triangle is hit once per edge, so the
// sum is divided by 3 to agree with subgraph-copy counting.
uint64_t count_book_copies(const Graph& g, int p);

// True iff some vertex pair has at least q common neighbors, i.e. g
// contains K_{2,q}. Works for any q, unlike the generic counter.
bool contains_k2q(const Graph& g, int q);

// True iff some edge has at least p common neighbors, i.e. g contains B_p.
bool contains_book(const Graph& g, int p);

struct ForbiddenReport {
  bool has_bowknot = false;
  bool has_house = false;
  bool has_k23 = false;
  bool any() const { return has_bowknot || has_house || has_k23; }
};

// The three subgraphs no uniquely diamond-saturated graph may contain.
ForbiddenReport forbidden_check(const Graph& g);

// C(n, k) in uint64, throwing std::overflow_error rather than wrapping.
uint64_t binomial(uint64_t n, uint64_t k);

}  // namespace booksat
