#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "booksat/graph.hpp"

namespace booksat {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Decodes one graph6 value. Accepts and strips an optional ">>graph6<<"
// header; rejects n > 128, bad characters, wrong length, and nonzero
// padding bits.
Graph parse_graph6(std::string_view text);

// Standard graph6, no header.
std::string to_graph6(const Graph& g);

}  // namespace booksat
