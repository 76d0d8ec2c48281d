#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "metric_lines/vertex_set.hpp"

namespace metric_lines {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
class Graph {
 public:
  /// Throws IndexOutOfRange, SelfLoop or TooManyVertices. Duplicate edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must already be symmetric and irreflexive; checked.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int edge_count() const;
  /// Edges (i, j) with i < j, sorted.
  std::vector<Edge> edges() const;
  std::span<const VertexSet> rows() const { return adj_; }

  /// Relabel: vertex v of *this becomes perm[v] in the result.
  Graph permuted(std::span<const int> perm) const;
  Graph without_edges(std::span<const Edge> edges) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)) {}
  std::vector<VertexSet> adj_;
};

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
 public:
  int order() const { return n_; }
  int operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  int diameter() const;
  /// {u : d(x, u) == k}
  VertexSet sphere(int x, int k) const;

 private:
  friend DistanceMatrix distance_matrix(const Graph& g);
  int n_ = 0;
  std::vector<std::uint8_t> d_;
};

bool is_connected(const Graph& g);

/// BFS from every vertex. Throws Disconnected.
DistanceMatrix distance_matrix(const Graph& g);

/// Throws Disconnected.
int diameter(const Graph& g);

/// Bitset test for diameter <= 2 without building the matrix.
bool diameter_at_most_two(const Graph& g);

/// Non-neighbors of x other than x. Under diameter 2 these are exactly the
/// vertices at distance 2; for larger diameters use DistanceMatrix::sphere.
VertexSet neighbors2(const Graph& g, int x);

}  // namespace metric_lines
