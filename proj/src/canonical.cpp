#include "metric_lines/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "metric_lines/error.hpp"
#include "metric_lines/io.hpp"

namespace metric_lines {

CanonicalCode CanonicalCode::of_labeled(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices) {
    throw Error(ErrorCode::TooLarge, "code needs n <= 12, got " + std::to_string(g.order()));
  }
  CanonicalCode code;
  code.n_ = g.order();
  std::size_t k = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) code.set_bit(k);
  return code;
}

std::vector<std::uint8_t> CanonicalCode::bytes() const {
  const std::size_t bits = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  std::vector<std::uint8_t> out((bits + 7) / 8, 0);
  for (std::size_t k = 0; k < bits; ++k)
    if (bit(k)) out[k / 8] |= static_cast<std::uint8_t>(0x80U >> (k % 8));
  return out;
}

Graph CanonicalCode::graph() const {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bit(k)) edges.emplace_back(i, j);
  return Graph::from_edges(n_, edges);
}

std::string CanonicalCode::graph6() const { return to_graph6(graph()); }

// Individualization-refinement search. The ordered partition lives in
// `lab` with cell boundaries recorded at each cell's first position; the
// result is the smallest leaf code of the search tree.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()) {
    if (n_ > kMaxCanonicalVertices) {
      throw Error(ErrorCode::TooLarge, "canonical form needs n <= 12, got " + std::to_string(n_));
    }
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).bits();
  }

  CanonicalLabeling run(VertexSet distinguished) {
    add_twin_transpositions(distinguished);
    State root;
    std::uint32_t queue = 0;
    int pos = 0;
    auto place_cell = [&](VertexSet cell) {
      if (cell.empty()) return;
      const int start = pos;
      for (int v : cell) root.lab[pos++] = static_cast<std::int8_t>(v);
      root.cell_end[start] = static_cast<std::int8_t>(pos);
      queue |= 1U << start;
    };
    place_cell(VertexSet::full(n_) - distinguished);
    place_cell(distinguished & VertexSet::full(n_));
    refine(root, queue);
    search(root);

    CanonicalLabeling out;
    out.code = best_;
    out.position.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) out.position[best_lab_[i]] = i;
    return out;
  }

 private:
  using Perm = std::array<std::int8_t, kMaxCanonicalVertices>;

  struct State {
    Perm lab{};
    Perm cell_end{};  // valid at cell starts only
  };

  void add_twin_transpositions(VertexSet distinguished) {
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (distinguished.contains(u) != distinguished.contains(v)) continue;
        const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        if ((adj_[u] & ~pair) != (adj_[v] & ~pair)) continue;
        Perm p = identity();
        std::swap(p[u], p[v]);
        automorphisms_.push_back(p);
      }
    }
  }

  Perm identity() const {
    Perm p{};
    for (int i = 0; i < n_; ++i) p[i] = static_cast<std::int8_t>(i);
    return p;
  }

  // Splits every cell by neighbor counts into each queued splitter until the
  // partition is equitable. The queue is a bitmask of cell starts and is
  // drained smallest-first, so the outcome depends only on the ordered
  // partition, never on vertex names.
  void refine(State& s, std::uint32_t queue) const {
    std::array<int, kMaxCanonicalVertices> count{};
    while (queue != 0) {
      const int ws = std::countr_zero(queue);
      queue &= queue - 1;
      std::uint64_t splitter = 0;
      for (int k = ws; k < s.cell_end[ws]; ++k) splitter |= std::uint64_t{1} << s.lab[k];

      for (int c = 0; c < n_;) {
        const int e = s.cell_end[c];
        if (e - c > 1) {
          bool differ = false;
          for (int k = c; k < e; ++k) {
            count[k] = std::popcount(adj_[s.lab[k]] & splitter);
            differ = differ || count[k] != count[c];
          }
          if (differ) {
            for (int k = c + 1; k < e; ++k) {
              const int key = count[k];
              const std::int8_t v = s.lab[k];
              int m = k;
              for (; m > c && count[m - 1] > key; --m) {
                count[m] = count[m - 1];
                s.lab[m] = s.lab[m - 1];
              }
              count[m] = key;
              s.lab[m] = v;
            }
            int start = c;
            for (int k = c + 1; k <= e; ++k) {
              if (k == e || count[k] != count[k - 1]) {
                s.cell_end[start] = static_cast<std::int8_t>(k);
                queue |= 1U << start;
                start = k;
              }
            }
          }
        }
        c = e;
      }
    }
  }

  void search(const State& s) {
    int target = 0;
    while (target < n_ && s.cell_end[target] - target == 1) target = s.cell_end[target];
    if (target == n_) {
      leaf(s);
      return;
    }
    const int end = s.cell_end[target];
    VertexSet cell;
    for (int k = target; k < end; ++k) cell = cell.with(s.lab[k]);

    VertexSet tried;
    for (int v : cell) {
      if (!tried.empty() && equivalent_to_tried(v, tried)) continue;
      tried = tried.with(v);

      State child = s;
      const auto at = std::find(child.lab.begin() + target, child.lab.begin() + end, v);
      std::iter_swap(child.lab.begin() + target, at);
      child.cell_end[target] = static_cast<std::int8_t>(target + 1);
      child.cell_end[target + 1] = static_cast<std::int8_t>(end);
      refine(child, 1U << target);

      path_.push_back(v);
      search(child);
      path_.pop_back();
    }
  }

  // v lies in the orbit of an already explored sibling under the known
  // automorphisms that fix the current individualization path.
  bool equivalent_to_tried(int v, VertexSet tried) const {
    std::array<int, kMaxCanonicalVertices> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    bool any = false;
    for (const Perm& gamma : automorphisms_) {
      bool fixes_path = true;
      for (int p : path_) fixes_path = fixes_path && gamma[p] == p;
      if (!fixes_path) continue;
      any = true;
      for (int i = 0; i < n_; ++i) {
        const int a = find(i);
        const int b = find(gamma[i]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    if (!any) return false;
    const int root = find(v);
    for (int u : tried) {
      if (find(u) == root) return true;
    }
    return false;
  }

  void leaf(const State& s) {
    CanonicalCode code;
    code.n_ = n_;
    std::size_t k = 0;
    for (int j = 1; j < n_; ++j) {
      const std::uint64_t row = adj_[s.lab[j]];
      for (int i = 0; i < j; ++i, ++k)
        if ((row >> s.lab[i]) & 1U) code.set_bit(k);
    }
    if (!have_best_ || code < best_) {
      best_ = code;
      best_lab_ = s.lab;
      have_best_ = true;
    } else if (code == best_) {
      // best_lab_[i] -> s.lab[i] is an automorphism.
      Perm gamma{};
      bool trivial = true;
      for (int i = 0; i < n_; ++i) {
        gamma[best_lab_[i]] = s.lab[i];
        trivial = trivial && best_lab_[i] == s.lab[i];
      }
      if (!trivial) automorphisms_.push_back(gamma);
    }
  }

  int n_;
  std::array<std::uint64_t, kMaxCanonicalVertices> adj_{};
  std::vector<Perm> automorphisms_;
  std::vector<int> path_;
  CanonicalCode best_;
  Perm best_lab_{};
  bool have_best_ = false;
};

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run({}); }

CanonicalLabeling canonical_labeling(const Graph& g, VertexSet distinguished) {
  return Canonizer(g).run(distinguished);
}

CanonicalCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kMaxCanonicalVertices || h.order() > kMaxCanonicalVertices) {
    throw Error(ErrorCode::TooLarge, "isomorphism test needs n <= 12");
  }
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto degrees = [](const Graph& x) {
    std::vector<int> out;
    for (int v = 0; v < x.order(); ++v) out.push_back(x.degree(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (degrees(g) != degrees(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

namespace {

struct FamilyCode {
  FamilyName name;
  CanonicalCode code;
};

const std::vector<FamilyCode>& family_codes() {
  static const std::vector<FamilyCode> table = [] {
    std::vector<FamilyCode> out;
    for (const FamilyName& name : fixed_families()) out.push_back({name, canonical_form(named(name))});
    return out;
  }();
  return table;
}

}  // namespace

std::optional<FamilyName> classify_family(const Graph& g, bool include_diameter_three) {
  const CanonicalCode code = canonical_form(g);
  const auto& table = family_codes();
  const std::size_t limit = include_diameter_three ? table.size() : diameter_two_family().size();
  for (std::size_t i = 0; i < limit; ++i) {
    if (table[i].code == code) return table[i].name;
  }
  return std::nullopt;
}

}  // namespace metric_lines
