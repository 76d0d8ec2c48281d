#include "metric_lines/verifier.hpp"

#include <array>
#include <string>

#include "metric_lines/claims.hpp"
#include "metric_lines/enumerate.hpp"
#include "metric_lines/error.hpp"
#include "metric_lines/parallel.hpp"

namespace metric_lines {

ChenChvatalStatus check_chen_chvatal(const Graph& g) {
  const LineSet lines = line_set(g);
  ChenChvatalStatus status;
  status.n = g.order();
  status.line_count = lines.size();
  status.universal = lines.contains(g.vertices());
  status.satisfied = status.line_count >= static_cast<std::size_t>(status.n) || status.universal;
  return status;
}

bool VerificationReport::has_violation() const {
  if (!dichotomy_failures.empty()) return true;
  for (const auto& e : exceptions) {
    if (e.violation) return true;
  }
  return false;
}

namespace {

void check_verify_args(int n, const VerifyOptions& options) {
  if (n < kMinVerifyOrder || n > kMaxVerifyOrder) {
    throw Error(ErrorCode::TooLarge, "verification order " + std::to_string(n) + " outside 3..10");
  }
  if (options.diameter != 2 && options.diameter != 3) {
    throw Error(ErrorCode::BadParameter, "diameter filter must be 2 or 3");
  }
}

struct GraphRecord {
  bool in_diameter = false;
  std::size_t line_count = 0;
  bool dichotomy_failed = false;
  std::optional<ExceptionRecord> exception;
};

GraphRecord examine(const CanonicalCode& code, const VerifyOptions& options) {
  GraphRecord record;
  const Graph g = code.graph();
  const int diam = diameter(g);
  if (diam != options.diameter) return record;
  record.in_diameter = true;

  LineSet lines = line_set(g);
  const bool universal = lines.contains(g.vertices());
  const auto n = static_cast<std::size_t>(g.order());
  record.line_count = lines.size();
  record.dichotomy_failed = !(lines.size() >= n || universal);
  if (lines.size() >= n) return record;

  ExceptionRecord e;
  e.code = code;
  e.graph6 = code.graph6();
  e.n = g.order();
  e.edges = g.edge_count();
  e.diameter = diam;
  e.line_count = lines.size();
  e.universal = universal;
  e.family = classify_family(g, options.diameter == 3);
  e.violation = options.diameter == 2 && !e.family;
  e.lines = std::move(lines);
  record.exception = std::move(e);
  return record;
}

VerificationReport verify_codes(int n, const std::vector<CanonicalCode>& codes, const VerifyOptions& options,
                                std::chrono::steady_clock::time_point started) {
  std::vector<GraphRecord> records(codes.size());
  parallel_for(codes.size(), options.jobs, [&](std::size_t i) { records[i] = examine(codes[i], options); });

  VerificationReport report;
  report.n = n;
  report.diameter = options.diameter;
  report.total_connected = codes.size();
  for (std::size_t i = 0; i < records.size(); ++i) {
    GraphRecord& r = records[i];
    if (!r.in_diameter) continue;
    ++report.total_in_diameter;
    if (!report.min_line_count || r.line_count < *report.min_line_count) report.min_line_count = r.line_count;
    if (r.dichotomy_failed) report.dichotomy_failures.push_back(codes[i].graph6());
    if (r.exception) report.exceptions.push_back(std::move(*r.exception));
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace

VerificationReport verify_theorem(int n, const VerifyOptions& options) {
  check_verify_args(n, options);
  const auto started = std::chrono::steady_clock::now();
  EnumerationCursor cursor;
  cursor.n = n;
  cursor.jobs = options.jobs;
  return verify_codes(n, enumerate_codes(cursor), options, started);
}

VerificationReport verify_theorem(int n, std::span<const Graph> stream, const VerifyOptions& options) {
  check_verify_args(n, options);
  const auto started = std::chrono::steady_clock::now();
  return verify_codes(n, distinct_connected(stream, n), options, started);
}

std::string_view to_string(ClaimSuite suite) {
  switch (suite) {
    case ClaimSuite::IndependentIntersection: return "independent-intersection";
    case ClaimSuite::SecondLayerInjective: return "second-layer-injective";
    case ClaimSuite::ClassModules: return "class-independent-module";
    case ClaimSuite::LineTrichotomy: return "line-class-trichotomy";
  }
  return "?";
}

bool ClaimReport::passed() const {
  for (const auto& s : suites) {
    if (!s.passed()) return false;
  }
  return true;
}

ClaimReport run_claim_suite(int n, int jobs) {
  if (n < 1 || n > kMaxClaimOrder) {
    throw Error(ErrorCode::TooLarge, "claim suites need 1 <= n <= 8, got " + std::to_string(n));
  }
  EnumerationCursor cursor;
  cursor.n = n;
  cursor.diameter = 2;
  cursor.jobs = jobs;
  std::vector<Graph> graphs;
  enumerate_connected(cursor, [&](const Graph& g) { graphs.push_back(g); });

  constexpr ClaimSuite kSuites[] = {ClaimSuite::IndependentIntersection, ClaimSuite::SecondLayerInjective,
                                    ClaimSuite::ClassModules, ClaimSuite::LineTrichotomy};
  const bool trichotomy = n <= kMaxTrichotomyOrder;

  std::vector<std::array<claims::Outcome, 4>> outcomes(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    outcomes[i][0] = claims::independent_intersection(g);
    outcomes[i][1] = claims::second_layer_injective(g);
    outcomes[i][2] = claims::classes_are_independent_modules(g);
    if (trichotomy) outcomes[i][3] = claims::line_class_trichotomy(g);
  });

  ClaimReport report;
  report.n = n;
  report.graphs = graphs.size();
  for (std::size_t k = 0; k < 4; ++k) {
    SuiteResult result;
    result.suite = kSuites[k];
    result.ran = k != 3 || trichotomy;
    for (const auto& per_graph : outcomes) {
      result.checks += per_graph[k].checks;
      if (!result.counterexample && per_graph[k].failure) result.counterexample = per_graph[k].failure;
    }
    report.suites.push_back(std::move(result));
  }
  return report;
}

std::vector<ProfileRow> min_lines_profile(int n_max, int jobs) {
  if (n_max < kMinVerifyOrder || n_max > kMaxVerifyOrder) {
    throw Error(ErrorCode::TooLarge, "profile bound " + std::to_string(n_max) + " outside 3..10");
  }
  std::vector<ProfileRow> rows;
  for (int n = kMinVerifyOrder; n <= n_max; ++n) {
    EnumerationCursor cursor;
    cursor.n = n;
    cursor.jobs = jobs;
    const std::vector<CanonicalCode> codes = enumerate_codes(cursor);
    std::vector<std::optional<std::size_t>> counts(codes.size());
    parallel_for(codes.size(), jobs, [&](std::size_t i) {
      const Graph g = codes[i].graph();
      if (diameter(g) == 2) counts[i] = count_lines(g);
    });
    ProfileRow row;
    row.n = n;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (counts[i] && (!row.min_lines || *counts[i] < *row.min_lines)) {
        row.min_lines = counts[i];
        row.argmin_graph6 = codes[i].graph6();
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace metric_lines
