#include "metric_lines/graph.hpp"

#include <algorithm>
#include <string>

#include "metric_lines/error.hpp"

namespace metric_lines {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EqualVertices: return "EqualVertices";
    case ErrorCode::WrongDiameter: return "WrongDiameter";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadStream: return "BadStream";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (int v : *this) {
    if (!first_member) out += ' ';
    out += std::to_string(v);
    first_member = false;
  }
  out += '}';
  return out;
}

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices, "vertex count " + std::to_string(n) + " outside 1..64");
  }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj[u] = adj[u].with(v);
    adj[v] = adj[v].with(u);
  }
  return Graph(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet all = VertexSet::full(n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_subset_of(all)) throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(i));
    if (rows[i].contains(i)) throw Error(ErrorCode::SelfLoop, "row " + std::to_string(i));
    for (int j : rows[i]) {
      if (!rows[j].contains(i)) throw Error(ErrorCode::BadParameter, "asymmetric adjacency");
    }
  }
  return Graph(std::move(rows));
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < order(); ++i) {
    for (int j : adj_[i] - VertexSet::full(i + 1)) out.emplace_back(i, j);
  }
  return out;
}

Graph Graph::permuted(std::span<const int> perm) const {
  std::vector<VertexSet> adj(adj_.size());
  for (int i = 0; i < order(); ++i) {
    for (int j : adj_[i]) adj[perm[i]] = adj[perm[i]].with(perm[j]);
  }
  return Graph(std::move(adj));
}

Graph Graph::without_edges(std::span<const Edge> edges) const {
  std::vector<VertexSet> adj = adj_;
  for (auto [u, v] : edges) {
    adj[u] = adj[u].without(v);
    adj[v] = adj[v].without(u);
  }
  return Graph(std::move(adj));
}

int DistanceMatrix::diameter() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

VertexSet DistanceMatrix::sphere(int x, int k) const {
  VertexSet out;
  for (int u = 0; u < n_; ++u) {
    if ((*this)(x, u) == k) out = out.with(u);
  }
  return out;
}

bool is_connected(const Graph& g) {
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= frontier;
  }
  return seen == g.vertices();
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm;
  dm.n_ = n;
  dm.d_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    int depth = 0;
    while (!frontier.empty()) {
      ++depth;
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - seen;
      seen |= frontier;
      for (int v : frontier) dm.d_[static_cast<std::size_t>(s) * n + v] = static_cast<std::uint8_t>(depth);
    }
    if (seen != g.vertices()) {
      throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(s) + " does not reach every vertex");
    }
  }
  return dm;
}

int diameter(const Graph& g) { return distance_matrix(g).diameter(); }

bool diameter_at_most_two(const Graph& g) {
  const VertexSet all = g.vertices();
  for (int x = 0; x < g.order(); ++x) {
    VertexSet reach = g.neighbors(x).with(x);
    for (int a : g.neighbors(x)) reach |= g.neighbors(a);
    if (reach != all) return false;
  }
  return true;
}

VertexSet neighbors2(const Graph& g, int x) { return g.vertices() - g.neighbors(x).with(x); }

}  // namespace metric_lines
