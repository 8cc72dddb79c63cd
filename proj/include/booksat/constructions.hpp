#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "booksat/srg.hpp"

namespace booksat {

// A family builder's stated precondition failed (distinct from bad input
// syntax; the CLI maps this to its own exit code).
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Both sides of "nontrivial uniquely B_p-saturated and triangle-free with a
// cycle <=> strongly regular (n, k, 0, p)". For p >= 2 the left side is
// equivalent to girth exactly 4; stating it via triangle-freeness keeps the
// p = 1 case (girth-5 Moore graphs) inside the same equivalence.
struct BookSrgReport {
  int p = 0;
  bool unique_saturated = false;
  ExtendedDistance girth_value;
  bool lhs = false;
  std::optional<SrgParams> params;
  bool rhs = false;
  bool agree = false;
};
BookSrgReport book_srg_equivalence(const Graph& g, int p);

// K_{k,...,k} with r parts: B_{(r-2)k+1}-free and uniquely B_{(r-1)k}-saturated.
struct MultipartiteExample {
  Graph graph;
  int r = 0, k = 0;
  int p_free = 0;
  int p_sat = 0;
};
MultipartiteExample multipartite_example(int r, int k);

// K_{rm} minus r vertex-disjoint copies of a strongly regular (m, r, lambda,
// mu) graph with lambda >= mu: uniquely B_{rm-2r+lambda}-saturated and
// (rm-r-1)-regular. Copy i occupies vertices [i*m, (i+1)*m).
struct CliqueDeletionResult {
  Graph graph;
  int p = 0;
  SrgParams removed_params{};
};
CliqueDeletionResult clique_deletion(int r, std::span<const Graph> removed);

// base (p-1)-regular and uniquely B_{p-1}-saturated (checked, trivially or
// not); adds a universal vertex and a pendant on it. The result is uniquely
// B_p-saturated.
Graph cone_construction(const Graph& base, int p);

struct SrgGirth4Spec {
  Graph graph;
  int p;
};
struct MultipartiteSpec {
  int r, k;
};
struct CliqueDeletionSpec {
  int r;
  std::vector<Graph> removed;
};
struct ConeSpec {
  Graph base;
  int p;
};
using BookFamilySpec =
    std::variant<SrgGirth4Spec, MultipartiteSpec, CliqueDeletionSpec, ConeSpec>;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // offending non-edge / degree / subgraph when failing
};

struct ClaimReport {
  std::string family;
  Graph graph;
  int p = 0;
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

// Builds the family member and machine-checks every claim attached to it.
ClaimReport verify_claim(const BookFamilySpec& spec);

}  // namespace booksat
