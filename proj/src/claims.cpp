#include "metric_lines/claims.hpp"

#include "metric_lines/io.hpp"
#include "metric_lines/lines.hpp"

namespace metric_lines::claims {

namespace {

std::string describe(const Graph& g, const std::string& what) { return to_graph6(g) + ": " + what; }

}  // namespace

std::vector<VertexSet> sampled_maximal_independent_sets(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> out;
  if (n <= 6) {
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      const VertexSet s(bits);
      if (!is_independent(g, s)) continue;
      bool maximal = true;
      for (int v : g.vertices() - s) maximal = maximal && !(g.neighbors(v) & s).empty();
      if (maximal) out.push_back(s);
    }
    return out;
  }
  for (int start = 0; start < n; ++start) {
    VertexSet s = VertexSet::single(start);
    for (int v = 0; v < n; ++v) {
      if (!s.contains(v) && (g.neighbors(v) & s).empty()) s = s.with(v);
    }
    out.push_back(s);
  }
  return out;
}

Outcome independent_intersection(const Graph& g) {
  Outcome out;
  for (VertexSet s : sampled_maximal_independent_sets(g)) {
    for (int x : s) {
      for (int y : s) {
        if (y <= x) continue;
        ++out.checks;
        const VertexSet line = detail::line_diam2_unchecked(g, x, y);
        if ((line & s) != VertexSet{x, y}) {
          out.failure = describe(g, "S=" + s.to_string() + " line(" + std::to_string(x) + "," + std::to_string(y) +
                                        ")=" + line.to_string());
          return out;
        }
      }
    }
  }
  return out;
}

Outcome second_layer_injective(const Graph& g) {
  Outcome out;
  for (int x = 0; x < g.order(); ++x) {
    ++out.checks;
    const PivotDecomposition pd = pivot_decomposition(g, x);
    const auto d2 = static_cast<std::size_t>(neighbors2(g, x).size());
    if (pd.l2.size() != d2) {
      out.failure = describe(g, "pivot " + std::to_string(x) + ": " + std::to_string(pd.l2.size()) +
                                    " second-layer lines for d2=" + std::to_string(d2));
      return out;
    }
  }
  return out;
}

Outcome classes_are_independent_modules(const Graph& g) {
  Outcome out;
  for (int x = 0; x < g.order(); ++x) {
    for (VertexSet c : pivot_decomposition(g, x).classes) {
      ++out.checks;
      if (!is_independent(g, c) || !is_module(g, c)) {
        out.failure = describe(g, "pivot " + std::to_string(x) + " class " + c.to_string());
        return out;
      }
    }
  }
  return out;
}

Outcome line_class_trichotomy(const Graph& g) {
  Outcome out;
  const int n = g.order();
  std::vector<PivotDecomposition> pivots;
  for (int x = 0; x < n; ++x) pivots.push_back(pivot_decomposition(g, x));

  auto fail = [&](int v, int w, int x, const std::string& why) {
    out.failure = describe(g, "line(" + std::to_string(v) + "," + std::to_string(w) + "), pivot " +
                                  std::to_string(x) + ": " + why);
  };

  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      const VertexSet line = detail::line_diam2_unchecked(g, v, w);
      const VertexSet ends{v, w};
      for (int x = 0; x < n; ++x) {
        const PivotDecomposition& pd = pivots[x];
        for (VertexSet c : pd.classes) {
          if (!(c & ends).empty()) continue;
          ++out.checks;
          const VertexSet meet = c & line;
          if (!meet.empty() && meet != c) {
            fail(v, w, x, "class " + c.to_string() + " split");
            return out;
          }
        }
        const VertexSet nx = g.neighbors(x);
        if (!nx.contains(v) || !nx.contains(w)) continue;
        ++out.checks;
        const VertexSet both = pd.class_of(v) | pd.class_of(w);
        if (g.adjacent(v, w) ? !both.is_subset_of(line) : (both & line) != ends) {
          fail(v, w, x, "classes " + both.to_string());
          return out;
        }
      }
    }
  }
  return out;
}

Outcome closed_form_agreement(const Graph& g) {
  Outcome out;
  const DistanceMatrix d = distance_matrix(g);
  for (int x = 0; x < g.order(); ++x) {
    for (int y = x + 1; y < g.order(); ++y) {
      ++out.checks;
      if (line_diam2(g, x, y) != line_general(d, x, y)) {
        out.failure = describe(g, "pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
        return out;
      }
    }
  }
  return out;
}

}  // namespace metric_lines::claims
