#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "metric_lines/graph.hpp"

namespace metric_lines {

/// McKay's graph6, without the ">>graph6<<" header.
std::string to_graph6(const Graph& g);

/// Strict decoder: rejects bad characters, a truncated or over-long body,
/// non-zero padding bits and n == 0. Throws ParseError.
Graph from_graph6(std::string_view text);

/// One graph6 string per line; blank lines are skipped. Throws BadStream
/// naming the offending line.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// "n m" followed by m lines "i j", 0-based. Throws ParseError, or the
/// Graph::from_edges errors for bad indices.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace metric_lines
