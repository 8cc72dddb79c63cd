#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "booksat/graph.hpp"

namespace booksat {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);  // S_n: center plus n-1 leaves
Graph double_star(int s, int t);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(std::span<const int> parts);

// Book B_p: rootlet edge {0,1} plus p pages, each adjacent to both ends.
// B_2 is the diamond C4+.
Graph book_graph(int pages);

Graph paw();      // triangle with a pendant edge (C3*)
Graph house();    // C5 plus one chord
Graph bowknot();  // two triangles sharing one vertex
Graph k23();

Graph pentagon();
Graph petersen();
Graph folded_5cube();
Graph hoffman_singleton();

// Embedded graph6 data, strongly-regular parameters re-verified at load.
Graph gewirtz();
Graph m22_graph();
Graph higman_sims();

// Lookup by name with integer parameters, e.g. ("book", {3}) or
// ("petersen", {}). Throws std::invalid_argument for unknown names or bad
// parameters.
Graph named_graph(std::string_view name, std::span<const int> params);

// "paw", "book:3", "doublestar:2,3", "k5", "c4", ... single-string form of
// named_graph used by the CLI and tests.
Graph parse_named_spec(std::string_view spec);

// All parameterless named graphs, for round-trip style sweeps.
std::vector<std::pair<std::string, Graph>> all_named_graphs();

}  // namespace booksat
