#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "metric_lines/graph.hpp"

namespace metric_lines::claims {

/// Result of checking one property on one graph.
struct Outcome {
  std::size_t checks = 0;
  std::optional<std::string> failure;
};

/// Maximal independent sets used by the intersection property: all of them
/// for n <= 6, otherwise the greedy sweep started from each vertex.
std::vector<VertexSet> sampled_maximal_independent_sets(const Graph& g);

/// line(x,y) ∩ S = {x,y} for sampled maximal independent S and x,y ∈ S.
Outcome independent_intersection(const Graph& g);
/// b ↦ line(x,b) is injective on N²(x), i.e. the pivot's second-layer lines
/// number exactly d₂(x), for every pivot x.
Outcome second_layer_injective(const Graph& g);
/// Every class of the same-line relation on N(x) is an independent module.
Outcome classes_are_independent_modules(const Graph& g);
/// For every line ℓ = line(v,w) and pivot x: classes avoiding v and w lie
/// inside ℓ or miss it; for v,w ∈ N(x), an edge vw puts [v] ∪ [w] inside ℓ
/// and a non-edge leaves ([v] ∪ [w]) ∩ ℓ = {v,w}.
Outcome line_class_trichotomy(const Graph& g);

/// Pairs where the diameter-two closed form differs from the general line.
Outcome closed_form_agreement(const Graph& g);

}  // namespace metric_lines::claims
