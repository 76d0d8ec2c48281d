// Test-only reference computations. Nothing here calls the library's
// distance, line or canonical-form code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "metric_lines/graph.hpp"

namespace oracle {

using metric_lines::Edge;
using metric_lines::Graph;
using metric_lines::VertexSet;

inline constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Upper-triangle bits in graph6 column order under the labeling
/// vertex v -> perm[v], as a vector<bool>.
inline std::vector<bool> labeled_code(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[perm[v]] = v;
  std::vector<bool> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(at[i], at[j]));
  return bits;
}

/// Minimum code over all n! labelings.
inline std::vector<bool> brute_force_min_code(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best = labeled_code(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, labeled_code(g, perm));
  return best;
}

/// Every geodesic (shortest path) of g as its vertex sequence.
inline std::vector<std::vector<int>> all_geodesics(const Graph& g) {
  const auto d = floyd_warshall(g);
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  auto extend = [&](auto&& self, int target) -> void {
    const int at = path.back();
    if (at == target) {
      out.push_back(path);
      return;
    }
    for (int next = 0; next < n; ++next) {
      if (g.adjacent(at, next) && d[next][target] == d[at][target] - 1) {
        path.push_back(next);
        self(self, target);
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t || d[s][t] >= kInf) continue;
      path = {s};
      extend(extend, t);
    }
  }
  return out;
}

/// Vertices z such that some shortest path contains x, y and z.
inline VertexSet line_by_geodesics(const std::vector<std::vector<int>>& geodesics, int x, int y) {
  VertexSet out{x, y};
  for (const auto& p : geodesics) {
    VertexSet on;
    for (int v : p) on = on.with(v);
    if (on.contains(x) && on.contains(y)) out |= on;
  }
  return out;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Random connected graph: a random spanning tree plus random extra edges.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return Graph::from_edges(n, edges).permuted(perm);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// All labeled graphs on n vertices (n <= 6), as a list.
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<Edge> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((mask >> k) & 1U) edges.push_back(slots[k]);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

inline bool connected_by_floyd(const Graph& g) {
  for (const auto& row : floyd_warshall(g))
    for (int x : row)
      if (x >= kInf) return false;
  return true;
}

inline int diameter_by_floyd(const Graph& g) {
  int out = 0;
  for (const auto& row : floyd_warshall(g))
    for (int x : row) out = std::max(out, x);
  return out;
}

}  // namespace oracle
