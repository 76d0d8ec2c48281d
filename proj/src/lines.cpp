#include "metric_lines/lines.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

void check_pair(int x, int y) {
  if (x == y) throw Error(ErrorCode::EqualVertices, "line through " + std::to_string(x) + " twice");
}

void require_diameter_two(const Graph& g) {
  if (g.order() < 3 || !diameter_at_most_two(g) || g.edge_count() == g.order() * (g.order() - 1) / 2) {
    throw Error(ErrorCode::WrongDiameter, "graph does not have diameter 2");
  }
}

}  // namespace

LineSet::LineSet(std::vector<VertexSet> lines) : lines_(std::move(lines)) {
  std::sort(lines_.begin(), lines_.end());
  lines_.erase(std::unique(lines_.begin(), lines_.end()), lines_.end());
}

bool LineSet::contains(VertexSet line) const { return std::binary_search(lines_.begin(), lines_.end(), line); }

VertexSet line_general(const DistanceMatrix& d, int x, int y) {
  check_pair(x, y);
  const int dxy = d(x, y);
  VertexSet out = VertexSet{x, y};
  for (int z = 0; z < d.order(); ++z) {
    const int dxz = d(x, z);
    const int dzy = d(z, y);
    if (dxz + dzy == dxy || dxy + dzy == dxz || dxy + dxz == dzy) out = out.with(z);
  }
  return out;
}

VertexSet detail::line_diam2_unchecked(const Graph& g, int x, int y) {
  const VertexSet nx = g.neighbors(x);
  const VertexSet ny = g.neighbors(y);
  const VertexSet ends{x, y};
  if (nx.contains(y)) return ends | (nx ^ ny);
  return ends | (nx & ny);
}

VertexSet line_diam2(const Graph& g, int x, int y) {
  check_pair(x, y);
  require_diameter_two(g);
  return detail::line_diam2_unchecked(g, x, y);
}

LineSet line_set(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> lines;
  lines.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  if (is_connected(g) && diameter_at_most_two(g)) {
    // Complete graphs are included: both closed forms reduce to {x,y}.
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) lines.push_back(detail::line_diam2_unchecked(g, x, y));
  } else {
    const DistanceMatrix d = distance_matrix(g);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) lines.push_back(line_general(d, x, y));
  }
  return LineSet(std::move(lines));
}

std::size_t count_lines(const Graph& g) { return line_set(g).size(); }

bool has_universal_line(const Graph& g) {
  const LineSet lines = line_set(g);
  return lines.contains(g.vertices());
}

VertexSet PivotDecomposition::class_of(int u) const {
  for (VertexSet c : classes) {
    if (c.contains(u)) return c;
  }
  return {};
}

PivotDecomposition pivot_decomposition(const Graph& g, int x) {
  require_diameter_two(g);
  PivotDecomposition out;
  out.x = x;

  std::map<VertexSet, VertexSet> by_line;
  for (int a : g.neighbors(x)) {
    VertexSet& members = by_line[detail::line_diam2_unchecked(g, x, a)];
    members = members.with(a);
  }
  std::vector<VertexSet> l1;
  for (const auto& [line, members] : by_line) {
    l1.push_back(line);
    out.l1_multiplicity.push_back(static_cast<std::size_t>(members.size()));
    out.classes.push_back(members);
  }
  out.l1 = LineSet(std::move(l1));
  std::sort(out.classes.begin(), out.classes.end(),
            [](VertexSet lhs, VertexSet rhs) { return lhs.first() < rhs.first(); });

  std::vector<VertexSet> l2;
  for (int b : neighbors2(g, x)) l2.push_back(detail::line_diam2_unchecked(g, x, b));
  out.l2 = LineSet(std::move(l2));
  return out;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(g.neighbors(v) & s).empty()) return false;
  }
  return true;
}

bool is_module(const Graph& g, VertexSet s) {
  for (int z : g.vertices() - s) {
    const VertexSet seen = g.neighbors(z) & s;
    if (!seen.empty() && seen != s) return false;
  }
  return true;
}

}  // namespace metric_lines
