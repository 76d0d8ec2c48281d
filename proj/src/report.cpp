#include "metric_lines/report.hpp"

#include <ostream>

#include <json.hpp>

namespace metric_lines {

namespace {

std::string family_text(const ExceptionRecord& e) { return e.family ? to_string(*e.family) : std::string(); }

nlohmann::ordered_json lines_json(const LineSet& lines) {
  auto out = nlohmann::ordered_json::array();
  for (VertexSet line : lines) out.push_back(line.to_vector());
  return out;
}

}  // namespace

void write_report_text(std::ostream& out, const VerificationReport& report) {
  out << "n=" << report.n << " diameter=" << report.diameter << " connected=" << report.total_connected
      << " in-diameter=" << report.total_in_diameter << " min-lines=";
  if (report.min_line_count) {
    out << *report.min_line_count;
  } else {
    out << '-';
  }
  out << " exceptions=" << report.exceptions.size() << '\n';
  for (const auto& e : report.exceptions) {
    out << "  " << e.graph6 << " lines=" << e.line_count << " universal=" << (e.universal ? "yes" : "no")
        << " family=" << (e.family ? to_string(*e.family) : "-");
    if (e.violation) {
      out << " THEOREM VIOLATION";
      for (VertexSet line : e.lines) out << ' ' << line.to_string();
    }
    out << '\n';
  }
  for (const auto& g6 : report.dichotomy_failures) out << "  " << g6 << " CHEN-CHVATAL VIOLATION\n";
}

void write_reports_csv(std::ostream& out, std::span<const VerificationReport> reports) {
  out << "n,graph6,edges,diameter,line_count,universal,family,violation\n";
  for (const auto& report : reports) {
    for (const auto& e : report.exceptions) {
      out << e.n << ',' << e.graph6 << ',' << e.edges << ',' << e.diameter << ',' << e.line_count << ','
          << (e.universal ? "true" : "false") << ',' << family_text(e) << ',' << (e.violation ? "true" : "false")
          << '\n';
    }
  }
}

void write_reports_json(std::ostream& out, std::span<const VerificationReport> reports, bool dump_lines) {
  nlohmann::ordered_json root;
  auto list = nlohmann::ordered_json::array();
  std::size_t total = 0;
  bool violation = false;
  for (const auto& report : reports) {
    nlohmann::ordered_json r;
    r["n"] = report.n;
    r["diameter"] = report.diameter;
    r["total_connected"] = report.total_connected;
    r["total_in_diameter"] = report.total_in_diameter;
    r["min_line_count"] = report.min_line_count ? nlohmann::ordered_json(*report.min_line_count) : nullptr;
    auto exceptions = nlohmann::ordered_json::array();
    for (const auto& e : report.exceptions) {
      nlohmann::ordered_json j;
      j["n"] = e.n;
      j["graph6"] = e.graph6;
      j["edges"] = e.edges;
      j["diameter"] = e.diameter;
      j["line_count"] = e.line_count;
      j["universal"] = e.universal;
      j["family"] = e.family ? nlohmann::ordered_json(to_string(*e.family)) : nullptr;
      j["violation"] = e.violation;
      if (dump_lines || e.violation) j["lines"] = lines_json(e.lines);
      exceptions.push_back(std::move(j));
    }
    r["exceptions"] = std::move(exceptions);
    r["dichotomy_failures"] = report.dichotomy_failures;
    total += report.exceptions.size();
    violation = violation || report.has_violation();
    list.push_back(std::move(r));
  }
  root["reports"] = std::move(list);
  root["total_exceptions"] = total;
  root["violation"] = violation;
  out << root.dump(2) << '\n';
}

void write_claims_text(std::ostream& out, const ClaimReport& report) {
  for (const auto& s : report.suites) {
    out << "n=" << report.n << ' ' << to_string(s.suite) << ' ';
    if (!s.ran) {
      out << "skipped\n";
      continue;
    }
    out << (s.passed() ? "pass" : "FAIL") << " graphs=" << report.graphs << " checks=" << s.checks;
    if (s.counterexample) out << " counterexample=" << *s.counterexample;
    out << '\n';
  }
}

void write_profile_csv(std::ostream& out, std::span<const ProfileRow> rows) {
  out << "n,min_lines,graph6\n";
  for (const auto& row : rows) {
    out << row.n << ',';
    if (row.min_lines) out << *row.min_lines;
    out << ',' << row.argmin_graph6 << '\n';
  }
}

}  // namespace metric_lines
