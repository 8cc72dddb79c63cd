#include "booksat/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "booksat/canonical.hpp"
#include "booksat/graph6.hpp"
#include "booksat/saturation.hpp"

namespace booksat {

namespace {

std::vector<std::vector<Graph>> generate_levels(int n_max) {
  std::vector<std::vector<Graph>> levels(n_max + 1);
  levels[0].push_back(Graph::from_edges(0, {}));
  for (int n = 1; n <= n_max; ++n) {
    std::unordered_set<std::string> seen;
    for (const Graph& parent : levels[n - 1]) {
      auto base_edges = parent.edges();
      // New vertex n-1 attached to every subset of the old vertices; every
      // n-vertex class has a vertex whose deletion is some parent class, so
      // this covers everything and the canonical key removes duplicates.
      for (uint64_t mask = 0; mask < (1ULL << (n - 1)); ++mask) {
        auto edges = base_edges;
        for (int v = 0; v < n - 1; ++v)
          if ((mask >> v) & 1) edges.emplace_back(v, n - 1);
        Graph child = Graph::from_edges(n, edges);
        Graph canon = canonical_relabel(child);
        if (seen.insert(to_graph6(canon)).second) levels[n].push_back(std::move(canon));
      }
    }
  }
  return levels;
}

bool passes_diamond_pruning(const Graph& g) {
  if (!is_connected(g)) return false;
  if (!(diameter(g) == 2)) return false;
  auto gi = girth(g);
  if (!(gi == 3 || gi == 4)) return false;
  return !forbidden_check(g).any();
}

SearchMatch make_match(const Graph& g) {
  SearchMatch m;
  m.n = g.n();
  m.canonical_g6 = canonical_form(g).g6;
  m.triangles = count_triangles(g);
  m.girth_value = girth(g);
  m.params = srg_params(g);
  m.non_edges = g.n() * (g.n() - 1) / 2 - g.edge_count();
  return m;
}

}  // namespace

std::vector<Graph> generate_nonisomorphic(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  return std::move(generate_levels(n)[n]);
}

SearchReport filter_graphs(std::span<const Graph> graphs, const Pattern& h,
                           const SearchOptions& opts) {
  if (opts.pruning && h.book_pages() != 2)
    throw std::invalid_argument("pruning is only sound for the diamond pattern");

  auto evaluate = [&](const Graph& g) -> bool {
    if (opts.connected_only && !is_connected(g)) return false;
    if (opts.pruning && !passes_diamond_pruning(g)) return false;
    return nontrivial_uniquely_saturated(g, h);
  };

  std::vector<uint8_t> matched(graphs.size(), 0);
  int workers = std::max(1, opts.workers);
  if (workers == 1 || graphs.size() < 2) {
    for (size_t i = 0; i < graphs.size(); ++i) matched[i] = evaluate(graphs[i]);
  } else {
    size_t chunk = (graphs.size() + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      size_t lo = w * chunk;
      size_t hi = std::min(graphs.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi, w] {
        try {
          for (size_t i = lo; i < hi; ++i) matched[i] = evaluate(graphs[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  SearchReport report;
  for (size_t i = 0; i < graphs.size(); ++i) {
    auto& counts = report.per_n[graphs[i].n()];
    ++counts.examined;
    if (matched[i]) {
      ++counts.matched;
      report.matches.push_back(make_match(graphs[i]));
    }
  }
  std::ranges::sort(report.matches, [](const SearchMatch& a, const SearchMatch& b) {
    return std::tie(a.n, a.canonical_g6) < std::tie(b.n, b.canonical_g6);
  });
  // Streams may repeat an isomorphism class; the match list never does.
  auto dup = std::ranges::unique(report.matches, [](const SearchMatch& a, const SearchMatch& b) {
    return a.canonical_g6 == b.canonical_g6;
  });
  report.matches.erase(dup.begin(), dup.end());
  return report;
}

SearchReport search(const Pattern& h, const SearchOptions& opts) {
  if (opts.n_min < 0 || opts.n_min > opts.n_max)
    throw std::invalid_argument("bad vertex range");
  if (opts.n_max > kGeneratorEnvelope)
    throw std::invalid_argument("range too large: internal generator is rated up to n=" +
                                std::to_string(kGeneratorEnvelope));
  auto levels = generate_levels(opts.n_max);
  SearchReport report;
  for (int n = opts.n_min; n <= opts.n_max; ++n) {
    SearchReport part = filter_graphs(levels[n], h, opts);
    report.per_n.insert(part.per_n.begin(), part.per_n.end());
    report.matches.insert(report.matches.end(),
                          std::make_move_iterator(part.matches.begin()),
                          std::make_move_iterator(part.matches.end()));
  }
  return report;  // per-n blocks are already in (n, g6) order
}

}  // namespace booksat
