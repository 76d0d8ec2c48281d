#include "metric_lines/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "metric_lines/error.hpp"
#include "metric_lines/parallel.hpp"

namespace metric_lines {

namespace {

Graph with_new_vertex(const Graph& parent, VertexSet attach) {
  const int n = parent.order();
  std::vector<VertexSet> rows(parent.rows().begin(), parent.rows().end());
  for (int v : attach) rows[v] = rows[v].with(n);
  rows.push_back(attach);
  return Graph::from_adjacency(std::move(rows));
}

// Vertices whose removal leaves the graph connected.
VertexSet non_cut_vertices(const Graph& g) {
  const VertexSet all = g.vertices();
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet rest = all.without(v);
    if (rest.empty()) {
      out = out.with(v);
      continue;
    }
    VertexSet seen = VertexSet::single(rest.first());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (int u : frontier) next |= g.neighbors(u);
      frontier = (next & rest) - seen;
      seen |= frontier;
    }
    if (seen == rest) out = out.with(v);
  }
  return out;
}

// Children of one parent accepted by canonical augmentation: the new vertex
// must share an orbit with the canonical deletion vertex (the deletable
// vertex of greatest canonical position). Aut(parent)-equivalent extensions
// collapse in the local code set.
std::vector<CanonicalCode> augment(const Graph& parent, bool connected) {
  const int n = parent.order() + 1;
  const int fresh = n - 1;
  const std::uint64_t limit = std::uint64_t{1} << parent.order();
  std::vector<CanonicalCode> out;
  std::unordered_set<CanonicalCode> local;
  for (std::uint64_t mask = connected ? 1 : 0; mask < limit; ++mask) {
    const Graph child = with_new_vertex(parent, VertexSet(mask));
    const CanonicalLabeling lab = canonical_labeling(child);
    const VertexSet deletable = connected ? non_cut_vertices(child) : child.vertices();
    int chosen = -1;
    for (int v : deletable) {
      if (chosen < 0 || lab.position[v] > lab.position[chosen]) chosen = v;
    }
    if (chosen != fresh) {
      if (child.degree(chosen) != child.degree(fresh)) continue;
      const CanonicalCode a = canonical_labeling(child, VertexSet::single(fresh)).code;
      const CanonicalCode b = canonical_labeling(child, VertexSet::single(chosen)).code;
      if (a != b) continue;
    }
    if (local.insert(lab.code).second) out.push_back(lab.code);
  }
  return out;
}

void check_order(int n, int limit) {
  if (n < 1 || n > limit) {
    throw Error(ErrorCode::TooLarge, "enumeration order " + std::to_string(n) + " outside 1.." + std::to_string(limit));
  }
}

}  // namespace

std::vector<CanonicalCode> enumerate_codes(const EnumerationCursor& cursor) {
  check_order(cursor.n, kMaxEnumerationOrder);
  std::vector<CanonicalCode> level{CanonicalCode::of_labeled(Graph::from_edges(1, {}))};
  for (int k = 2; k <= cursor.n; ++k) {
    std::vector<std::vector<CanonicalCode>> per_parent(level.size());
    parallel_for(level.size(), cursor.jobs, [&](std::size_t i) {
      per_parent[i] = augment(level[i].graph(), cursor.connected);
    });
    std::vector<CanonicalCode> next;
    for (auto& chunk : per_parent) {
      next.insert(next.end(), chunk.begin(), chunk.end());
      std::vector<CanonicalCode>().swap(chunk);
    }
    std::sort(next.begin(), next.end());
    if (std::adjacent_find(next.begin(), next.end()) != next.end()) {
      throw std::logic_error("canonical augmentation produced a duplicate class");
    }
    level = std::move(next);
  }
  return level;
}

bool passes_filters(const EnumerationCursor& cursor, const Graph& g) {
  if (cursor.connected && !is_connected(g)) return false;
  if (!cursor.diameter) return true;
  if (!is_connected(g)) return false;
  return diameter(g) == *cursor.diameter;
}

std::size_t enumerate_connected(const EnumerationCursor& cursor, const std::function<void(const Graph&)>& visit) {
  std::size_t count = 0;
  for (const CanonicalCode& code : enumerate_codes(cursor)) {
    const Graph g = code.graph();
    if (!passes_filters(cursor, g)) continue;
    visit(g);
    ++count;
  }
  return count;
}

std::vector<Graph> enumerate_naive(int n) {
  check_order(n, kMaxNaiveOrder);
  std::vector<Edge> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::unordered_set<CanonicalCode> seen;
  std::vector<CanonicalCode> codes;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((mask >> k) & 1U) edges.push_back(slots[k]);
    const Graph g = Graph::from_edges(n, edges);
    if (!is_connected(g)) continue;
    const CanonicalCode code = canonical_form(g);
    if (seen.insert(code).second) codes.push_back(code);
  }
  std::sort(codes.begin(), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& code : codes) out.push_back(code.graph());
  return out;
}

std::vector<CanonicalCode> distinct_connected(std::span<const Graph> graphs, int n) {
  std::unordered_set<CanonicalCode> seen;
  std::vector<CanonicalCode> out;
  for (const Graph& g : graphs) {
    if (g.order() != n || !is_connected(g)) continue;
    const CanonicalCode code = canonical_form(g);
    if (seen.insert(code).second) out.push_back(code);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace metric_lines
