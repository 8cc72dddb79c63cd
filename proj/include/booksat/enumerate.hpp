#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "booksat/pattern.hpp"
#include "booksat/srg.hpp"

namespace booksat {

// Largest n the internal generator is rated for; the filter itself has no
// limit below the 128-vertex cap.
inline constexpr int kGeneratorEnvelope = 9;

// One canonically labeled representative per isomorphism class on n
// vertices, by vertex augmentation with canonical-form rejection.
// Deterministic order. Practical up to kGeneratorEnvelope.
std::vector<Graph> generate_nonisomorphic(int n);

struct SearchOptions {
  int n_min = 1;
  int n_max = 1;
  bool connected_only = false;
  // Early rejection by the necessary conditions proved for the diamond
  // (connected, diameter 2, girth 3 or 4, no forbidden subgraph). Only
  // valid when the pattern is the diamond; never changes the match set.
  bool pruning = false;
  int workers = 1;
};

struct SearchMatch {
  int n = 0;
  std::string canonical_g6;
  uint64_t triangles = 0;
  ExtendedDistance girth_value;
  std::optional<SrgParams> params;
  int non_edges = 0;  // each created exactly one copy
};

struct PerNCount {
  uint64_t examined = 0;
  uint64_t matched = 0;
  bool operator==(const PerNCount&) const = default;
};

struct SearchReport {
  std::map<int, PerNCount> per_n;
  std::vector<SearchMatch> matches;  // sorted by (n, canonical_g6)
};

// Report of all nontrivial uniquely h-saturated members of the stream.
// Output is independent of opts.workers; opts.n_min/n_max are ignored here
// (the stream is taken as-is).
SearchReport filter_graphs(std::span<const Graph> graphs, const Pattern& h,
                           const SearchOptions& opts);

// generate + filter over the n range; throws if the range leaves the
// generator envelope.
SearchReport search(const Pattern& h, const SearchOptions& opts);

}  // namespace booksat
