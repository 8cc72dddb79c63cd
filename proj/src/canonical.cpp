#include "booksat/canonical.hpp"

#include <algorithm>
#include <cstdint>

#include "booksat/graph6.hpp"

namespace booksat {

namespace {

using Partition = std::vector<std::vector<int>>;  // ordered cells, positions left to right

// Equitable refinement: split every cell by the vector of neighbor counts
// into all current cells, sub-cells ordered by ascending count vector.
// Deterministic and isomorphism-equivariant, which is all the search needs.
void refine(const Graph& g, Partition& part) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Bits128> masks(part.size());
    for (size_t i = 0; i < part.size(); ++i)
      for (int v : part[i]) masks[i].set(v);
    Partition next;
    next.reserve(part.size());
    for (const auto& cell : part) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> key;
        key.reserve(part.size());
        for (const auto& mask : masks)
          key.push_back(intersection_count(g.neighbors(v), mask));
        keyed.emplace_back(std::move(key), v);
      }
      std::sort(keyed.begin(), keyed.end());
      for (size_t i = 0; i < keyed.size();) {
        size_t j = i;
        while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
        std::vector<int> sub;
        for (size_t k = i; k < j; ++k) sub.push_back(keyed[k].second);
        std::sort(sub.begin(), sub.end());
        next.push_back(std::move(sub));
        i = j;
      }
    }
    if (next.size() != part.size()) changed = true;
    part = std::move(next);
  }
}

// Upper-triangle adjacency bits of the relabeled graph, packed MSB-first so
// word-wise comparison is lexicographic bit comparison.
std::vector<uint64_t> packed_matrix(const Graph& g, const std::vector<int>& vertex_at) {
  int n = g.n();
  std::vector<uint64_t> out((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
  size_t t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++t)
      if (g.adjacent(vertex_at[i], vertex_at[j])) out[t / 64] |= 1ULL << (63 - (t % 64));
  return out;
}

struct CanonSearch {
  const Graph& g;
  std::vector<uint64_t> best;
  std::vector<int> best_vertex_at;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph) {}

  void run(Partition part) {
    refine(g, part);
    auto it = std::find_if(part.begin(), part.end(),
                           [](const auto& c) { return c.size() > 1; });
    if (it == part.end()) {
      std::vector<int> vertex_at;
      vertex_at.reserve(part.size());
      for (const auto& cell : part) vertex_at.push_back(cell[0]);
      auto mat = packed_matrix(g, vertex_at);
      if (!have_best || mat < best) {
        best = std::move(mat);
        best_vertex_at = std::move(vertex_at);
        have_best = true;
      }
      return;
    }
    size_t idx = static_cast<size_t>(it - part.begin());
    for (int v : part[idx]) {
      Partition child;
      child.reserve(part.size() + 1);
      for (size_t i = 0; i < part.size(); ++i) {
        if (i != idx) {
          child.push_back(part[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : part[i])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      run(std::move(child));
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.n() == 0) return {};
  Partition root(1);
  for (int v = 0; v < g.n(); ++v) root[0].push_back(v);
  CanonSearch search(g);
  search.run(std::move(root));
  std::vector<int> labeling(g.n());
  for (int pos = 0; pos < g.n(); ++pos) labeling[search.best_vertex_at[pos]] = pos;
  return labeling;
}

Graph canonical_relabel(const Graph& g) {
  auto labeling = canonical_labeling(g);
  return apply_permutation(g, labeling);
}

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{to_graph6(canonical_relabel(g))};
}

}  // namespace booksat
