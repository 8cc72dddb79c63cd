#pragma once

#include <string>
#include <vector>

#include "booksat/graph.hpp"

namespace booksat {

// Canonical graph6 string of a canonically relabeled copy. Two graphs have
// equal CanonicalForm exactly when they are isomorphic; the search is
// exhaustive, so this holds at every n, with the usual caveat that highly
// symmetric graphs well past the enumeration range get slow.
struct CanonicalForm {
  std::string g6;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);

// The relabeled graph itself (canonical_form is its graph6).
Graph canonical_relabel(const Graph& g);

// Labeling that realizes the canonical form: vertex v maps to position
// labeling[v].
std::vector<int> canonical_labeling(const Graph& g);

}  // namespace booksat
