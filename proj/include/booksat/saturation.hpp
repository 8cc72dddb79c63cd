#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "booksat/pattern.hpp"

namespace booksat {

// Copies of h in g+uv that contain the new edge uv, i.e. the count increase.
// Book patterns take the rootlet/page common-neighbor fast path; everything
// else is counted as a difference of full counts. uv must be a non-edge.
uint64_t new_copies(const Graph& g, int u, int v, const Pattern& h);

// The fast path's decomposition for book patterns: copies where the added
// edge is the rootlet vs. a page edge. For p = 1 the roles coincide and all
// created triangles are reported as rootlet copies.
struct BookCopySplit {
  uint64_t as_rootlet = 0;
  uint64_t as_page = 0;
  uint64_t total() const { return as_rootlet + as_page; }
};
BookCopySplit book_new_copies_split(const Graph& g, int u, int v, int p);

struct NonEdgeCount {
  int u, v;
  uint64_t copies;
  bool operator==(const NonEdgeCount&) const = default;
};

struct SaturationVerdict {
  bool h_free = false;
  bool saturated = false;   // h_free and every non-edge creates >= 1 copy
  bool unique = false;      // h_free and every non-edge creates exactly 1
  bool nontrivial = false;  // |G| >= |H|
  bool vacuous = false;     // complete graph, nothing to add
  std::vector<NonEdgeCount> per_nonedge;  // sorted by (u, v)
};

SaturationVerdict verdict(const Graph& g, const Pattern& h);

// Early-exit form of verdict(g, h).unique && nontrivial, for search loops.
bool nontrivial_uniquely_saturated(const Graph& g, const Pattern& h);

// Saturating-edge classification for the diamond. The added edge is the
// chord of the created copy (both endpoints degree 3) in a type I edge, and
// a cycle edge (degrees 3 and 2) in a type II edge.
enum class EdgeKind { type_one, type_two };

struct EdgeClass {
  EdgeKind kind;
  std::array<int, 4> witness;  // vertex set of the created copy, sorted
  Graph induced_shape;         // induced on the witness before adding uv
};

// One entry per diamond created by adding the non-edge uv; empty when none.
std::vector<EdgeClass> classify_c4plus_edge(const Graph& g, int u, int v);

// |N(u) n N(v)| for every non-edge, sorted by (u, v).
std::vector<NonEdgeCount> common_neighbor_profile(const Graph& g);

// Common-neighbor profile condition on uniquely diamond-saturated graphs:
// every non-edge has 1 or 2 common neighbors; with 1, exactly one triangle
// shares an edge with the 2-path; with 2, none does.
struct TwoPathProfileReport {
  bool holds = true;
  std::vector<std::pair<int, int>> failures;  // offending non-edges
};
TwoPathProfileReport two_path_profile_check(const Graph& g);

}  // namespace booksat
