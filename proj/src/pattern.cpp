#include "booksat/pattern.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "booksat/named.hpp"

namespace booksat {

namespace {

constexpr int kPatternCap = 10;

void check_pattern_size(const Graph& h) {
  if (h.n() > kPatternCap)
    throw std::invalid_argument("pattern too large: " + std::to_string(h.n()) +
                                " vertices, cap is " + std::to_string(kPatternCap));
}

// Pattern-vertex visit order: greedy connected, max-degree-first. Position i
// stores which earlier positions must be neighbors of the image.
struct MatchPlan {
  std::vector<int> order;
  std::vector<std::vector<int>> earlier_neighbors;
  std::vector<int> degree;

  explicit MatchPlan(const Graph& h) {
    int n = h.n();
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      int best = -1, best_attached = -1, best_degree = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int attached = 0;
        for (int u : order) attached += h.adjacent(v, u) ? 1 : 0;
        if (attached > best_attached ||
            (attached == best_attached && h.degree(v) > best_degree)) {
          best = v;
          best_attached = attached;
          best_degree = h.degree(v);
        }
      }
      placed[best] = true;
      order.push_back(best);
    }
    earlier_neighbors.resize(n);
    degree.resize(n);
    for (int i = 0; i < n; ++i) {
      degree[i] = h.degree(order[i]);
      for (int j = 0; j < i; ++j)
        if (h.adjacent(order[i], order[j])) earlier_neighbors[i].push_back(j);
    }
  }
};

// Counts injective edge-preserving maps; stops at `limit` matches.
uint64_t count_matches(const Graph& g, const MatchPlan& plan, uint64_t limit) {
  int k = static_cast<int>(plan.order.size());
  if (k == 0) return 1;
  std::vector<int> image(k, -1);
  uint64_t found = 0;
  Bits128 used;

  auto candidates = [&](int i) {
    Bits128 cand = g.vertex_mask();
    for (int j : plan.earlier_neighbors[i]) cand &= g.neighbors(image[j]);
    return cand.minus(used);
  };

  // Iterative backtracking over positions.
  std::vector<Bits128> cands(k);
  int i = 0;
  cands[0] = candidates(0);
  while (i >= 0) {
    if (cands[i].empty()) {
      --i;
      if (i >= 0) used.reset(image[i]);
      continue;
    }
    int v = cands[i].lowest();
    cands[i].reset(v);
    if (g.degree(v) < plan.degree[i]) continue;
    if (i == k - 1) {
      if (++found >= limit) return found;
      continue;
    }
    image[i] = v;
    used.set(v);
    ++i;
    cands[i] = candidates(i);
  }
  return found;
}

}  // namespace

uint64_t count_monomorphisms(const Graph& g, const Graph& h) {
  check_pattern_size(h);
  MatchPlan plan(h);
  return count_matches(g, plan, std::numeric_limits<uint64_t>::max());
}

uint64_t aut_count(const Graph& h) {
  check_pattern_size(h);
  // Automorphisms are the adjacency-preserving self-maps in both directions;
  // with equal edge budgets that is monomorphisms h -> h preserving degree,
  // but counting directly with the non-edge constraint is just as easy.
  int n = h.n();
  if (n == 0) return 1;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  uint64_t count = 0;
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || h.degree(v) != h.degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = h.adjacent(i, j) == h.adjacent(v, image[j]);
      if (!ok) continue;
      image[i] = v;
      used[v] = true;
      self(self, i + 1);
      used[v] = false;
    }
  };
  recurse(recurse, 0);
  return count;
}

namespace {

// B_p structurally: with n = p+2 and e = 2p+1, a rootlet edge between two
// (p+1)-degree vertices and p degree-2 pages adjacent to both fills the
// whole edge budget, so the shape is forced.
std::optional<int> detect_book(const Graph& h) {
  int p = h.n() - 2;
  if (p < 1 || h.edge_count() != 2 * p + 1) return std::nullopt;
  if (p == 1) return 1;  // triangle
  std::vector<int> high;
  for (int v = 0; v < h.n(); ++v) {
    int d = h.degree(v);
    if (d == p + 1) high.push_back(v);
    else if (d != 2) return std::nullopt;
  }
  if (high.size() != 2 || !h.adjacent(high[0], high[1])) return std::nullopt;
  for (int v = 0; v < h.n(); ++v)
    if (v != high[0] && v != high[1] && !(h.adjacent(v, high[0]) && h.adjacent(v, high[1])))
      return std::nullopt;
  return p;
}

uint64_t book_automorphisms(int p) {
  if (p == 1) return 6;  // the triangle
  uint64_t r = 2;        // rootlet swap times page permutations
  for (uint64_t i = 2; i <= static_cast<uint64_t>(p); ++i) {
    if (r > std::numeric_limits<uint64_t>::max() / i)
      throw std::overflow_error("book automorphism count overflow");
    r *= i;
  }
  return r;
}

}  // namespace

Pattern::Pattern(Graph h) : graph_(std::move(h)), book_pages_(detect_book(graph_)) {
  aut_ = book_pages_ && graph_.n() > kPatternCap ? book_automorphisms(*book_pages_)
                                                 : aut_count(graph_);
}

uint64_t count_subgraph_copies(const Graph& g, const Pattern& h) {
  uint64_t monos = count_monomorphisms(g, h.graph());
  if (monos % h.automorphisms() != 0)
    throw std::logic_error("monomorphism count not divisible by automorphism count");
  return monos / h.automorphisms();
}

bool contains(const Graph& g, const Pattern& h) {
  if (auto p = h.book_pages()) return contains_book(g, *p);
  check_pattern_size(h.graph());
  MatchPlan plan(h.graph());
  return count_matches(g, plan, 1) > 0;
}

uint64_t count_triangles(const Graph& g) {
  uint64_t total = 0;
  for (int v = 1; v < g.n(); ++v) {
    Bits128 above = g.vertex_mask().minus(Bits128::below(v + 1));
    Bits128 row = g.neighbors(v);
    row.for_each([&](int u) {
      if (u < v) total += (common_neighbors(g, u, v) & above).count();
    });
  }
  return total;
}

std::vector<std::array<int, 3>> triangle_list(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) continue;
      Bits128 above = g.vertex_mask().minus(Bits128::below(v + 1));
      (common_neighbors(g, u, v) & above).for_each([&](int w) {
        out.push_back({u, v, w});
      });
    }
  return out;
}

uint64_t binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    uint64_t factor = n - k + i;
    if (r > std::numeric_limits<uint64_t>::max() / factor)
      throw std::overflow_error("binomial overflow");
    r = r * factor / i;  // product of i consecutive integers divides by i!
  }
  return r;
}

uint64_t count_book_copies(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("book page count must be >= 1");
  uint64_t total = 0;
  for (auto [u, v] : g.edges())
    total += binomial(static_cast<uint64_t>(common_neighbors(g, u, v).count()),
                      static_cast<uint64_t>(p));
  // B_1 is the triangle: the sum hits each one once per edge.
  return p == 1 ? total / 3 : total;
}

bool contains_k2q(const Graph& g, int q) {
  if (q < 1) throw std::invalid_argument("K_{2,q} needs q >= 1");
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (intersection_count(g.neighbors(u), g.neighbors(v)) >= q) return true;
  return false;
}

bool contains_book(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("book page count must be >= 1");
  for (auto [u, v] : g.edges())
    if (common_neighbors(g, u, v).count() >= p) return true;
  return false;
}

ForbiddenReport forbidden_check(const Graph& g) {
  static const Pattern bowknot_pat{bowknot()};
  static const Pattern house_pat{house()};
  static const Pattern k23_pat{k23()};
  return ForbiddenReport{
      .has_bowknot = contains(g, bowknot_pat),
      .has_house = contains(g, house_pat),
      .has_k23 = contains(g, k23_pat),
  };
}

}  // namespace booksat
