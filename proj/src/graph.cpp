#include "booksat/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace booksat {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > Graph::max_vertices)
    throw std::invalid_argument("vertex count must be in [0, 128], got " + std::to_string(n));
}

}  // namespace

void Graph::require_vertex(int v) const {
  if (v < 0 || v >= n())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n()));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).freeze();
}

int Graph::edge_count() const {
  int total = 0;
  for (const auto& row : adj_) total += row.count();
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n(); ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

GraphBuilder::GraphBuilder(int n) {
  check_vertex_count(n);
  adj_.resize(n);
}

void GraphBuilder::add_edge(int u, int v) {
  int n = static_cast<int>(adj_.size());
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

Graph GraphBuilder::freeze() && {
  // Invariant validation: symmetry, loop-freedom, no bits at or above n.
  int n = static_cast<int>(adj_.size());
  Bits128 mask = Bits128::below(n);
  for (int u = 0; u < n; ++u) {
    if (adj_[u].test(u)) throw std::logic_error("loop in adjacency");
    if (!adj_[u].is_subset_of(mask)) throw std::logic_error("adjacency bit beyond n");
    adj_[u].for_each([&](int v) {
      if (!adj_[v].test(u)) throw std::logic_error("asymmetric adjacency");
    });
  }
  Graph g;
  g.adj_ = std::move(adj_);
  return g;
}

Bits128 common_neighbors(const Graph& g, int u, int v) {
  g.require_vertex(u);
  g.require_vertex(v);
  return g.neighbors(u) & g.neighbors(v);
}

Graph add_edge(const Graph& g, int u, int v) {
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v) throw std::invalid_argument("cannot add a loop");
  if (g.adjacent(u, v)) throw std::invalid_argument("edge already present");
  GraphBuilder b(g.n());
  for (auto [x, y] : g.edges()) b.add_edge(x, y);
  b.add_edge(u, v);
  return std::move(b).freeze();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  check_vertex_count(g.n() + h.n());
  GraphBuilder b(g.n() + h.n());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(g.n() + u, g.n() + v);
  return std::move(b).freeze();
}

Graph join(const Graph& g, const Graph& h) {
  check_vertex_count(g.n() + h.n());
  GraphBuilder b(g.n() + h.n());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(g.n() + u, g.n() + v);
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < h.n(); ++v) b.add_edge(u, g.n() + v);
  return std::move(b).freeze();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  GraphBuilder b(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i) {
    g.require_vertex(vertices[i]);
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return std::move(b).freeze();
}

Graph apply_permutation(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw std::invalid_argument("permutation size mismatch");
  GraphBuilder b(g.n());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).freeze();
}

std::vector<int> bfs_distances(const Graph& g, Bits128 sources) {
  std::vector<int> dist(g.n(), -1);
  Bits128 frontier = sources & g.vertex_mask();
  Bits128 seen = frontier;
  int d = 0;
  while (frontier.any()) {
    Bits128 next;
    frontier.for_each([&](int v) {
      dist[v] = d;
      next |= g.neighbors(v);
    });
    frontier = next.minus(seen);
    seen |= next;
    ++d;
  }
  return dist;
}

ExtendedDistance distance(const Graph& g, int u, int v) {
  g.require_vertex(u);
  g.require_vertex(v);
  auto dist = bfs_distances(g, Bits128::single(u));
  return dist[v] < 0 ? ExtendedDistance::infinite() : ExtendedDistance(dist[v]);
}

ExtendedDistance diameter(const Graph& g) {
  if (g.n() <= 1) return ExtendedDistance(0);
  int best = 0;
  for (int u = 0; u < g.n(); ++u) {
    auto dist = bfs_distances(g, Bits128::single(u));
    for (int v = 0; v < g.n(); ++v) {
      if (dist[v] < 0) return ExtendedDistance::infinite();
      best = std::max(best, dist[v]);
    }
  }
  return ExtendedDistance(best);
}

ExtendedDistance girth(const Graph& g) {
  // BFS from every root; any non-tree edge (x, y) closes a walk of length
  // d[x] + d[y] + 1, which always contains a cycle no longer than itself,
  // and a root on a shortest cycle attains the girth exactly.
  int best = -1;
  std::vector<int> parent(g.n());
  std::vector<int> dist(g.n());
  std::vector<int> queue(g.n());
  for (int r = 0; r < g.n(); ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    queue[tail++] = r;
    dist[r] = 0;
    parent[r] = -1;
    while (head < tail) {
      int x = queue[head++];
      bool done = false;
      g.neighbors(x).for_each([&](int y) {
        if (done) return;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue[tail++] = y;
        } else if (y != parent[x]) {
          int cand = dist[x] + dist[y] + 1;
          if (best < 0 || cand < best) best = cand;
          if (cand <= 2 * dist[x]) done = true;  // no shorter cycle via this root
        }
      });
      if (done) break;
    }
    if (best == 3) break;
  }
  return best < 0 ? ExtendedDistance::infinite() : ExtendedDistance(best);
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  auto dist = bfs_distances(g, Bits128::single(0));
  return std::ranges::none_of(dist, [](int d) { return d < 0; });
}

}  // namespace booksat
