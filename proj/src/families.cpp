#include "metric_lines/families.hpp"

#include <array>
#include <charconv>
#include <vector>

#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

struct TagName {
  FamilyTag tag;
  std::string_view name;
};

constexpr std::array<TagName, 16> kTagNames{{
    {FamilyTag::K12, "K12"},
    {FamilyTag::K22, "K22"},
    {FamilyTag::K23, "K23"},
    {FamilyTag::K122, "K122"},
    {FamilyTag::K122p, "K122p"},
    {FamilyTag::K122pp, "K122pp"},
    {FamilyTag::M6, "M6"},
    {FamilyTag::K6p, "K6p"},
    {FamilyTag::M8, "M8"},
    {FamilyTag::K8p, "K8p"},
    {FamilyTag::M6minus, "M6minus"},
    {FamilyTag::M8minus, "M8minus"},
    {FamilyTag::M8hat, "M8hat"},
    {FamilyTag::Kp, "Kp"},
    {FamilyTag::M2p, "M2p"},
    {FamilyTag::Kprime2p, "Kprime2p"},
}};

constexpr std::array<FamilyName, 13> kFixed{{
    {FamilyTag::K12},
    {FamilyTag::K22},
    {FamilyTag::K23},
    {FamilyTag::K122},
    {FamilyTag::K122p},
    {FamilyTag::K122pp},
    {FamilyTag::M6},
    {FamilyTag::K6p},
    {FamilyTag::M8},
    {FamilyTag::K8p},
    {FamilyTag::M6minus},
    {FamilyTag::M8minus},
    {FamilyTag::M8hat},
}};

bool is_parameterized(FamilyTag tag) {
  return tag == FamilyTag::Kp || tag == FamilyTag::M2p || tag == FamilyTag::Kprime2p;
}

// Five-vertex graphs share the labels a=0, c=1, x=2, b=3, d=4.
constexpr int a = 0, c = 1, x = 2, b = 3, d = 4;

Graph complete(int p) {
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(p, edges);
}

// Cliques on 0..p-1 and p..2p-1, matching i -- i+p.
Graph two_cliques_matched(int p) {
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      edges.emplace_back(i, j);
      edges.emplace_back(i + p, j + p);
    }
    edges.emplace_back(i, i + p);
  }
  return Graph::from_edges(2 * p, edges);
}

// Parts {2i, 2i+1}.
Graph cocktail_party(int p) {
  std::vector<Edge> edges;
  for (int i = 0; i < 2 * p; ++i)
    for (int j = i + 1; j < 2 * p; ++j)
      if (i / 2 != j / 2) edges.emplace_back(i, j);
  return Graph::from_edges(2 * p, edges);
}

}  // namespace

std::string to_string(const FamilyName& name) {
  for (const auto& [tag, text] : kTagNames) {
    if (tag != name.tag) continue;
    std::string out(text);
    if (is_parameterized(tag)) out += ":" + std::to_string(name.p);
    return out;
  }
  return "?";
}

std::optional<FamilyName> parse_family(std::string_view text) {
  std::string_view head = text;
  std::optional<int> param;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    std::string_view digits = text.substr(colon + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
    param = value;
  }
  for (const auto& [tag, name] : kTagNames) {
    if (name != head) continue;
    if (is_parameterized(tag) != param.has_value()) return std::nullopt;
    return FamilyName{tag, param.value_or(0)};
  }
  return std::nullopt;
}

std::span<const FamilyName> diameter_two_family() { return std::span(kFixed).first(10); }
std::span<const FamilyName> diameter_three_examples() { return std::span(kFixed).subspan(10); }
std::span<const FamilyName> fixed_families() { return kFixed; }

Graph named(const FamilyName& name) {
  switch (name.tag) {
    case FamilyTag::K12:
      return Graph::from_edges(3, {{0, 1}, {1, 2}});
    case FamilyTag::K22:
      return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case FamilyTag::K23:
      return Graph::from_edges(5, {{a, x}, {a, b}, {a, d}, {c, x}, {c, b}, {c, d}});
    case FamilyTag::K122:
      // Parts {x,b}, {a,c}, {d}.
      return Graph::from_edges(5, {{x, a}, {x, c}, {x, d}, {b, a}, {b, c}, {b, d}, {a, d}, {c, d}});
    case FamilyTag::K122p:
      // K122 minus xd: induced 4-cycles xabc and xadc, triangles abd and cbd.
      return Graph::from_edges(5, {{x, a}, {x, c}, {b, a}, {b, c}, {b, d}, {a, d}, {c, d}});
    case FamilyTag::K122pp:
      // The house: 5-cycle x a b d c with chord ac.
      return Graph::from_edges(5, {{x, a}, {a, b}, {b, d}, {d, c}, {c, x}, {a, c}});
    case FamilyTag::M6:
      return two_cliques_matched(3);
    case FamilyTag::K6p:
      return cocktail_party(3);
    case FamilyTag::M8:
      return two_cliques_matched(4);
    case FamilyTag::K8p:
      return cocktail_party(4);
    case FamilyTag::M6minus: {
      const Edge removed[] = {{0, 3}};
      return two_cliques_matched(3).without_edges(removed);
    }
    case FamilyTag::M8minus: {
      const Edge removed[] = {{0, 4}};
      return two_cliques_matched(4).without_edges(removed);
    }
    case FamilyTag::M8hat: {
      // First clique cut down to its perfect matching {01, 23}.
      const Edge removed[] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
      return two_cliques_matched(4).without_edges(removed);
    }
    case FamilyTag::Kp:
      if (name.p < 1 || name.p > kMaxVertices) throw Error(ErrorCode::BadParameter, "Kp needs 1 <= p <= 64");
      return complete(name.p);
    case FamilyTag::M2p:
      if (name.p < 2 || 2 * name.p > kMaxVertices) throw Error(ErrorCode::BadParameter, "M2p needs 2 <= p <= 32");
      return two_cliques_matched(name.p);
    case FamilyTag::Kprime2p:
      if (name.p < 2 || 2 * name.p > kMaxVertices) {
        throw Error(ErrorCode::BadParameter, "Kprime2p needs 2 <= p <= 32");
      }
      return cocktail_party(name.p);
  }
  throw Error(ErrorCode::BadParameter, "unknown family tag");
}

}  // namespace metric_lines
