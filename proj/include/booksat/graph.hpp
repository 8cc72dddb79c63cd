#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "booksat/bits128.hpp"

namespace booksat {

// Distance-like quantity that may be infinite (no path, no cycle).
class ExtendedDistance {
 public:
  constexpr ExtendedDistance() : value_(kInfiniteTag) {}
  constexpr explicit ExtendedDistance(int v) : value_(v) {}
  static constexpr ExtendedDistance infinite() { return ExtendedDistance(); }

  constexpr bool is_infinite() const { return value_ == kInfiniteTag; }
  constexpr bool is_finite() const { return value_ != kInfiniteTag; }
  // Only valid when finite.
  constexpr int finite_value() const { return value_; }

  constexpr bool operator==(const ExtendedDistance&) const = default;
  constexpr bool operator==(int v) const { return is_finite() && value_ == v; }

 private:
  static constexpr int kInfiniteTag = -1;
  int value_;
};

// Immutable simple graph, n <= 128, adjacency rows as fixed-width bitsets.
class Graph {
 public:
  static constexpr int max_vertices = 128;

  Graph() = default;

  // Exactly the given edges; duplicates collapse. Throws on loops,
  // out-of-range endpoints, or n outside [0, 128].
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  Bits128 vertex_mask() const { return Bits128::below(n()); }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  Bits128 neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  // Edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

  // Checked accessors used by the public operation surface.
  void require_vertex(int v) const;

 private:
  friend class GraphBuilder;
  std::vector<Bits128> adj_;
};

// Mutable staging area for constructors; freeze() validates and yields a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int n() const { return static_cast<int>(adj_.size()); }
  Graph freeze() &&;

 private:
  std::vector<Bits128> adj_;
};

Bits128 common_neighbors(const Graph& g, int u, int v);

// New graph with edge uv added; throws if uv is a loop or already present.
Graph add_edge(const Graph& g, int u, int v);

// h's vertices are relabeled to follow g's.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// Subgraph induced on `vertices`, relabeled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Relabeled copy: vertex v of g becomes perm[v].
Graph apply_permutation(const Graph& g, std::span<const int> perm);

ExtendedDistance distance(const Graph& g, int u, int v);
ExtendedDistance diameter(const Graph& g);
ExtendedDistance girth(const Graph& g);
bool is_connected(const Graph& g);

// BFS distances from a source set; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Bits128 sources);

}  // namespace booksat
