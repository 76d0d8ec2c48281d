#include "metric_lines/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

constexpr int kOffset = 63;

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph from_graph6(std::string_view text) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::ParseError, "graph6 '" + std::string(text) + "': " + why);
  };
  for (char ch : text) {
    if (ch < kOffset || ch > 126) throw fail("character outside 63..126");
  }
  if (text.empty()) throw fail("empty");
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - kOffset;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw fail("unsupported vertex count");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - kOffset);
    if (n < 63) throw fail("non-minimal size prefix");
    pos = 4;
  }
  if (n == 0) throw fail("zero vertices");
  if (n > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "graph6 with n=" + std::to_string(n));

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body) throw fail("expected " + std::to_string(body) + " body bytes");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kOffset;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int last = text[pos + body - 1] - kOffset;
    if (last & ((1 << (6 - k % 6)) - 1)) throw fail("non-zero padding");
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const Error& e) {
      throw Error(ErrorCode::BadStream, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (in.bad()) throw Error(ErrorCode::BadStream, "read failure");
  return out;
}

Graph read_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw Error(ErrorCode::ParseError, "edge list: missing 'n m' header");
  if (m < 0) throw Error(ErrorCode::ParseError, "edge list: negative edge count");
  if (n < 1 || n > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "edge list: n=" + std::to_string(n));
  std::vector<Edge> edges;
  for (long long e = 0; e < m; ++e) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw Error(ErrorCode::ParseError, "edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "edge list: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw Error(ErrorCode::ParseError, "edge list: trailing content '" + rest + "'");
  return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace metric_lines
