#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "metric_lines/graph.hpp"

namespace metric_lines {

/// Deduplicated lines in increasing bit-pattern order.
class LineSet {
 public:
  LineSet() = default;
  /// Sorts and removes duplicates.
  explicit LineSet(std::vector<VertexSet> lines);

  std::size_t size() const { return lines_.size(); }
  bool empty() const { return lines_.empty(); }
  bool contains(VertexSet line) const;
  auto begin() const { return lines_.begin(); }
  auto end() const { return lines_.end(); }
  std::span<const VertexSet> view() const { return lines_; }

  friend bool operator==(const LineSet&, const LineSet&) = default;

 private:
  std::vector<VertexSet> lines_;
};

/// The line through x and y in the metric `d`: x, y and every z where one of
/// the three points lies between the other two. Throws EqualVertices.
VertexSet line_general(const DistanceMatrix& d, int x, int y);

/// Closed form for diameter-two graphs:
///   xy not an edge: {x,y} ∪ (N(x) ∩ N(y))
///   xy an edge:     {x,y} ∪ (N(x) \ N(y)) ∪ (N(y) \ N(x))
/// Throws EqualVertices, WrongDiameter.
VertexSet line_diam2(const Graph& g, int x, int y);

namespace detail {
/// line_diam2 without the diameter check.
VertexSet line_diam2_unchecked(const Graph& g, int x, int y);
}  // namespace detail

/// All lines over the C(n,2) pairs. Throws Disconnected.
LineSet line_set(const Graph& g);
/// Throws Disconnected.
std::size_t count_lines(const Graph& g);
/// Throws Disconnected.
bool has_universal_line(const Graph& g);

struct PivotDecomposition {
  int x = 0;
  /// {line(x,a) : a ∈ N(x)} with l1_multiplicity[i] = #{a : line(x,a) = l1[i]}.
  LineSet l1;
  std::vector<std::size_t> l1_multiplicity;
  /// {line(x,b) : b ∈ N²(x)}
  LineSet l2;
  /// Classes of N(x) under u R v ⇔ line(x,u) = line(x,v), ordered by least member.
  std::vector<VertexSet> classes;

  /// The class of u; u must be a neighbor of x.
  VertexSet class_of(int u) const;
};

/// Throws WrongDiameter unless g has diameter exactly two.
PivotDecomposition pivot_decomposition(const Graph& g, int x);

bool is_independent(const Graph& g, VertexSet s);
/// Every vertex outside s sees all of s or none of s.
bool is_module(const Graph& g, VertexSet s);

}  // namespace metric_lines
