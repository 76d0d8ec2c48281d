#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metric_lines/families.hpp"
#include "metric_lines/graph.hpp"

namespace metric_lines {

inline constexpr int kMaxCanonicalVertices = 12;

/// Upper-triangle adjacency bits (graph6 column order) of the canonically
/// relabeled graph. Equal codes ⇔ isomorphic graphs.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  /// Code of g exactly as labeled (no canonization). n <= 12.
  static CanonicalCode of_labeled(const Graph& g);

  int order() const { return n_; }
  /// Bit string packed MSB-first, ceil(n(n-1)/2 / 8) bytes.
  std::vector<std::uint8_t> bytes() const;
  /// The canonical representative.
  Graph graph() const;
  std::string graph6() const;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

  std::size_t hash() const noexcept {
    return std::hash<std::uint64_t>{}(words_[0] * 0x9E3779B97F4A7C15ULL ^ words_[1] ^ static_cast<std::uint64_t>(n_));
  }

 private:
  friend class Canonizer;
  bool bit(std::size_t k) const { return (words_[k / 64] >> (63 - k % 64)) & 1U; }
  void set_bit(std::size_t k) { words_[k / 64] |= std::uint64_t{1} << (63 - k % 64); }

  int n_ = 0;
  std::array<std::uint64_t, 2> words_{};
};

struct CanonicalLabeling {
  CanonicalCode code;
  /// position[v] = index of v in the canonical representative.
  std::vector<int> position;
};

/// Throws TooLarge for n > 12.
CanonicalLabeling canonical_labeling(const Graph& g);
/// Canonical labeling of g with the vertices of `distinguished` coloured
/// apart; they always occupy the last positions.
CanonicalLabeling canonical_labeling(const Graph& g, VertexSet distinguished);

/// Throws TooLarge for n > 12.
CanonicalCode canonical_form(const Graph& g);

/// Rejects on order, edge count and degree multiset before comparing codes.
bool are_isomorphic(const Graph& g, const Graph& h);

/// The member of the diameter-two family g is isomorphic to. With
/// `include_diameter_three` the three diameter-three examples are also tried.
std::optional<FamilyName> classify_family(const Graph& g, bool include_diameter_three = false);

}  // namespace metric_lines

template <>
struct std::hash<metric_lines::CanonicalCode> {
  std::size_t operator()(const metric_lines::CanonicalCode& c) const noexcept { return c.hash(); }
};
