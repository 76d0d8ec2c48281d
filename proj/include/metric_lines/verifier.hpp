#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metric_lines/canonical.hpp"
#include "metric_lines/families.hpp"
#include "metric_lines/graph.hpp"
#include "metric_lines/lines.hpp"

namespace metric_lines {

/// Chen–Chvátal for one graph: at least n lines, or a universal line.
struct ChenChvatalStatus {
  int n = 0;
  std::size_t line_count = 0;
  bool universal = false;
  bool satisfied = false;

  friend bool operator==(const ChenChvatalStatus&, const ChenChvatalStatus&) = default;
};

/// Any diameter. Throws Disconnected.
ChenChvatalStatus check_chen_chvatal(const Graph& g);

/// A graph with fewer lines than vertices.
struct ExceptionRecord {
  CanonicalCode code;
  std::string graph6;
  int n = 0;
  int edges = 0;
  int diameter = 0;
  std::size_t line_count = 0;
  bool universal = false;
  std::optional<FamilyName> family;
  bool violation = false;
  LineSet lines;
};

struct VerificationReport {
  int n = 0;
  int diameter = 2;
  std::size_t total_connected = 0;
  /// Connected classes whose diameter equals `diameter`.
  std::size_t total_in_diameter = 0;
  /// Sorted by canonical code.
  std::vector<ExceptionRecord> exceptions;
  /// Over the diameter-filtered graphs; absent when there are none.
  std::optional<std::size_t> min_line_count;
  /// Graphs failing the Chen–Chvátal dichotomy (expected empty), by graph6.
  std::vector<std::string> dichotomy_failures;
  std::chrono::duration<double> elapsed{};

  /// An unclassified diameter-two exception or any dichotomy failure.
  bool has_violation() const;
};

struct VerifyOptions {
  int jobs = 1;
  /// 2 checks the characterization; 3 lists the diameter-three exceptions
  /// against the extended family list (unclassified ones are not violations).
  int diameter = 2;
};

inline constexpr int kMinVerifyOrder = 3;
inline constexpr int kMaxVerifyOrder = 10;

/// Exhaustive check over the built-in enumeration. Throws TooLarge unless
/// 3 <= n <= 10, BadParameter for a diameter other than 2 or 3.
VerificationReport verify_theorem(int n, const VerifyOptions& options = {});
/// Same check over an external graph stream (duplicates and disconnected
/// graphs dropped, graphs of other orders ignored).
VerificationReport verify_theorem(int n, std::span<const Graph> stream, const VerifyOptions& options = {});

enum class ClaimSuite {
  IndependentIntersection,
  SecondLayerInjective,
  ClassModules,
  LineTrichotomy,
};

std::string_view to_string(ClaimSuite suite);

struct SuiteResult {
  ClaimSuite suite{};
  /// false when n is outside the suite's bound.
  bool ran = false;
  std::size_t checks = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

struct ClaimReport {
  int n = 0;
  std::size_t graphs = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

inline constexpr int kMaxClaimOrder = 8;
inline constexpr int kMaxTrichotomyOrder = 7;

/// All four property suites over every diameter-two graph on n vertices.
/// Throws TooLarge for n > 8 (the trichotomy suite is skipped above 7).
ClaimReport run_claim_suite(int n, int jobs = 1);

struct ProfileRow {
  int n = 0;
  std::optional<std::size_t> min_lines;
  /// First graph in canonical order attaining the minimum.
  std::string argmin_graph6;
};

/// Minimum line count over diameter-two graphs for n = 3..n_max.
/// Report only. Throws TooLarge unless 3 <= n_max <= 10.
std::vector<ProfileRow> min_lines_profile(int n_max, int jobs = 1);

}  // namespace metric_lines
