#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "metric_lines/canonical.hpp"
#include "metric_lines/graph.hpp"

namespace metric_lines {

inline constexpr int kMaxEnumerationOrder = 10;
inline constexpr int kMaxNaiveOrder = 7;

struct EnumerationCursor {
  int n = 1;
  /// false also yields disconnected graphs.
  bool connected = true;
  /// Keep only graphs of this exact diameter (connected graphs only).
  std::optional<int> diameter;
  /// Worker count; 1 runs the serial reference loop.
  int jobs = 1;
};

/// One code per isomorphism class on cursor.n vertices, sorted. Ignores the
/// diameter filter. Throws TooLarge for n > 10.
std::vector<CanonicalCode> enumerate_codes(const EnumerationCursor& cursor);

/// Calls visit once per isomorphism class passing the filters, in canonical
/// code order, with the canonical representative. Returns the visit count.
std::size_t enumerate_connected(const EnumerationCursor& cursor, const std::function<void(const Graph&)>& visit);

/// Oracle: sweep all labeled graphs, keep connected ones, dedupe by
/// canonical code. Sorted by code. Throws TooLarge for n > 7.
std::vector<Graph> enumerate_naive(int n);

/// Canonical representatives of the distinct connected graphs of order n in
/// `graphs`, sorted by code. Graphs of other orders are ignored.
std::vector<CanonicalCode> distinct_connected(std::span<const Graph> graphs, int n);

/// True when g passes the cursor's connectivity and diameter filters.
bool passes_filters(const EnumerationCursor& cursor, const Graph& g);

}  // namespace metric_lines
