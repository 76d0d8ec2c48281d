#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "metric_lines/graph.hpp"

namespace metric_lines {

enum class FamilyTag {
  K12,
  K22,
  K23,
  K122,
  K122p,
  K122pp,
  M6,
  K6p,
  M8,
  K8p,
  M6minus,
  M8minus,
  M8hat,
  Kp,
  M2p,
  Kprime2p,
};

/// A named construction. `p` is only meaningful for Kp, M2p and Kprime2p.
struct FamilyName {
  FamilyTag tag;
  int p = 0;

  friend bool operator==(const FamilyName&, const FamilyName&) = default;
};

/// "K23", "M8hat", "Kp:5", "M2p:3", ...
std::string to_string(const FamilyName& name);
/// Inverse of to_string; nullopt for an unknown tag or malformed parameter.
std::optional<FamilyName> parse_family(std::string_view text);

/// The ten graphs of diameter two with fewer lines than vertices, in the
/// order K12, K22, K23, K122, K122p, K122pp, M6, K6p, M8, K8p.
std::span<const FamilyName> diameter_two_family();
/// M6minus, M8minus, M8hat.
std::span<const FamilyName> diameter_three_examples();
/// Both lists above, 13 entries.
std::span<const FamilyName> fixed_families();

/// Builds the construction with its fixed labeling (see README).
/// Throws BadParameter on p out of range.
Graph named(const FamilyName& name);
inline Graph named(FamilyTag tag) { return named(FamilyName{tag}); }

}  // namespace metric_lines
