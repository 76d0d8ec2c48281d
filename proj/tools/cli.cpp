#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "metric_lines/canonical.hpp"
#include "metric_lines/enumerate.hpp"
#include "metric_lines/error.hpp"
#include "metric_lines/families.hpp"
#include "metric_lines/io.hpp"
#include "metric_lines/lines.hpp"
#include "metric_lines/report.hpp"
#include "metric_lines/verifier.hpp"

namespace metric_lines::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrderRange {
  int low = 0;
  int high = 0;
};

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

// "7" or "3..9".
OrderRange parse_range(const std::string& text, int min, int max) {
  OrderRange range;
  const auto dots = text.find("..");
  std::optional<int> low;
  std::optional<int> high;
  if (dots == std::string::npos) {
    low = high = parse_int(text);
  } else {
    low = parse_int(std::string_view(text).substr(0, dots));
    high = parse_int(std::string_view(text).substr(dots + 2));
  }
  if (!low || !high || *low > *high) throw UsageError("bad vertex range '" + text + "'");
  if (*low < min || *high > max) {
    throw UsageError("vertex range '" + text + "' outside " + std::to_string(min) + ".." + std::to_string(max));
  }
  range.low = *low;
  range.high = *high;
  return range;
}

int default_jobs() {
  if (const char* env = std::getenv("METRIC_LINES_JOBS")) {
    if (auto v = parse_int(env); v && *v >= 1) return *v;
  }
  return 1;
}

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw Error(ErrorCode::BadStream, "cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
  void finish(const std::string& path) {
    if (!file_.is_open()) return;
    file_.close();
    if (!file_) throw Error(ErrorCode::BadStream, "failed writing '" + path + "'");
  }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

struct VerifyArgs {
  std::string range;
  std::string source = "builtin";
  std::string format = "text";
  std::string output;
  int jobs = 1;
  int diameter = 2;
  bool dump_lines = false;
};

int cmd_verify(const VerifyArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const OrderRange range = parse_range(a.range, kMinVerifyOrder, kMaxVerifyOrder);
  if (a.dump_lines && a.format != "json") throw UsageError("--dump-lines requires --format json");

  std::optional<std::vector<Graph>> stream;
  if (a.source == "stdin") {
    stream = read_graph6_stream(in);
  } else if (a.source != "builtin") {
    std::ifstream file(a.source);
    if (!file) throw Error(ErrorCode::BadStream, "cannot open '" + a.source + "'");
    stream = read_graph6_stream(file);
  }

  VerifyOptions options;
  options.jobs = a.jobs;
  options.diameter = a.diameter;
  std::vector<VerificationReport> reports;
  for (int n = range.low; n <= range.high; ++n) {
    reports.push_back(stream ? verify_theorem(n, *stream, options) : verify_theorem(n, options));
    err << "n=" << n << " verified in " << std::fixed << std::setprecision(3) << reports.back().elapsed.count()
        << "s\n";
  }

  Sink sink(a.output, out);
  std::size_t total = 0;
  bool violation = false;
  for (const auto& r : reports) {
    total += r.exceptions.size();
    violation = violation || r.has_violation();
  }
  if (a.format == "csv") {
    write_reports_csv(sink.stream(), reports);
  } else if (a.format == "json") {
    write_reports_json(sink.stream(), reports, a.dump_lines);
  } else {
    for (const auto& r : reports) write_report_text(sink.stream(), r);
    sink.stream() << "total exceptions: " << total << '\n';
    sink.stream() << "violations: " << (violation ? "yes" : "none") << '\n';
  }
  sink.finish(a.output);
  return violation ? kExitViolation : kExitOk;
}

struct LinesArgs {
  std::string graph6;
  std::string family;
  std::string edges;
};

int cmd_lines(const LinesArgs& a, std::ostream& out) {
  const int given = !a.graph6.empty() + !a.family.empty() + !a.edges.empty();
  if (given != 1) throw UsageError("give exactly one of GRAPH6, --family, --edges");
  std::optional<Graph> g;
  if (!a.graph6.empty()) {
    g = from_graph6(a.graph6);
  } else if (!a.family.empty()) {
    const auto name = parse_family(a.family);
    if (!name) throw UsageError("unknown family tag '" + a.family + "'");
    g = named(*name);
  } else {
    std::ifstream file(a.edges);
    if (!file) throw Error(ErrorCode::BadStream, "cannot open '" + a.edges + "'");
    g = read_edge_list(file);
  }
  const int diam = diameter(*g);
  const LineSet lines = line_set(*g);
  out << "n: " << g->order() << '\n';
  out << "diameter: " << diam << '\n';
  out << "lines: " << lines.size() << ", universal: " << (lines.contains(g->vertices()) ? "yes" : "no") << '\n';
  for (VertexSet line : lines) out << line.to_string() << '\n';
  return kExitOk;
}

int cmd_family(bool list, const std::string& emit, std::ostream& out) {
  if (list == !emit.empty()) throw UsageError("give exactly one of --list, --emit TAG");
  if (list) {
    for (const FamilyName& name : fixed_families()) {
      const Graph g = named(name);
      out << to_string(name) << " n=" << g.order() << " edges=" << g.edge_count() << " lines=" << count_lines(g)
          << " diameter=" << diameter(g) << ' ' << to_graph6(g) << '\n';
    }
    return kExitOk;
  }
  const auto name = parse_family(emit);
  if (!name) throw UsageError("unknown family tag '" + emit + "'");
  out << to_graph6(named(*name)) << '\n';
  return kExitOk;
}

struct EnumerateArgs {
  int n = 0;
  std::optional<int> diameter;
  bool all = false;
  bool count_only = false;
  int jobs = 1;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  if (a.n < 1 || a.n > kMaxEnumerationOrder) throw UsageError("--n must be within 1..10");
  if (a.all && a.diameter) throw UsageError("--diameter needs connected graphs; drop --all");
  EnumerationCursor cursor;
  cursor.n = a.n;
  cursor.connected = !a.all;
  cursor.diameter = a.diameter;
  cursor.jobs = a.jobs;
  if (a.count_only) {
    out << enumerate_connected(cursor, [](const Graph&) {}) << '\n';
    return kExitOk;
  }
  enumerate_connected(cursor, [&](const Graph& g) { out << to_graph6(g) << '\n'; });
  return kExitOk;
}

int cmd_claims(const std::string& range_text, int jobs, std::ostream& out) {
  const OrderRange range = parse_range(range_text, 1, kMaxClaimOrder);
  bool ok = true;
  for (int n = range.low; n <= range.high; ++n) {
    const ClaimReport report = run_claim_suite(n, jobs);
    write_claims_text(out, report);
    ok = ok && report.passed();
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_profile(int n_max, const std::string& output, int jobs, std::ostream& out) {
  if (n_max < kMinVerifyOrder || n_max > kMaxVerifyOrder) throw UsageError("--n-max must be within 3..10");
  const auto rows = min_lines_profile(n_max, jobs);
  Sink sink(output, out);
  write_profile_csv(sink.stream(), rows);
  sink.finish(output);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lines of graph metrics and exhaustive checks of the diameter-two characterization",
               "metric-lines"};
  app.require_subcommand(1, 1);

  VerifyArgs verify;
  verify.jobs = default_jobs();
  auto* verify_cmd = app.add_subcommand("verify", "Exceptions (fewer lines than vertices) over all graphs of each n");
  verify_cmd->add_option("--n,--n-range", verify.range, "Vertex count or range, e.g. 7 or 3..9")->required();
  verify_cmd->add_option("--source", verify.source, "builtin, stdin, or a graph6 file");
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"text", "csv", "json"}));
  verify_cmd->add_option("--output", verify.output, "Write the report here instead of stdout");
  verify_cmd->add_option("--jobs", verify.jobs)->check(CLI::Range(1, 1024));
  verify_cmd->add_option("--diameter", verify.diameter, "2 (default) or 3")->check(CLI::IsMember({2, 3}));
  verify_cmd->add_flag("--dump-lines", verify.dump_lines, "Include every line of every exception (json)");

  LinesArgs lines;
  auto* lines_cmd = app.add_subcommand("lines", "Print the lines of one graph");
  lines_cmd->add_option("graph6", lines.graph6, "Graph in graph6");
  lines_cmd->add_option("--family", lines.family, "Named construction, e.g. K23 or M2p:5");
  lines_cmd->add_option("--edges", lines.edges, "Edge-list file");

  bool family_list = false;
  std::string family_emit;
  auto* family_cmd = app.add_subcommand("family", "The named constructions");
  family_cmd->add_flag("--list", family_list);
  family_cmd->add_option("--emit", family_emit, "Print the graph6 of TAG");

  EnumerateArgs enumerate;
  enumerate.jobs = default_jobs();
  auto* enumerate_cmd = app.add_subcommand("enumerate", "One graph6 per isomorphism class");
  enumerate_cmd->add_option("--n", enumerate.n)->required();
  enumerate_cmd->add_option("--diameter", enumerate.diameter);
  enumerate_cmd->add_flag("--all", enumerate.all, "Include disconnected graphs");
  enumerate_cmd->add_flag("--count", enumerate.count_only, "Print only the number of classes");
  enumerate_cmd->add_option("--jobs", enumerate.jobs)->check(CLI::Range(1, 1024));

  std::string claims_range;
  int claims_jobs = default_jobs();
  auto* claims_cmd = app.add_subcommand("claims", "Run the structural property suites");
  claims_cmd->add_option("--n,--n-range", claims_range)->required();
  claims_cmd->add_option("--jobs", claims_jobs)->check(CLI::Range(1, 1024));

  int profile_n_max = 0;
  std::string profile_output;
  int profile_jobs = default_jobs();
  auto* profile_cmd = app.add_subcommand("profile", "Minimum line count of diameter-two graphs per n (CSV)");
  profile_cmd->add_option("--n-max", profile_n_max)->required();
  profile_cmd->add_option("--output", profile_output);
  profile_cmd->add_option("--jobs", profile_jobs)->check(CLI::Range(1, 1024));

  std::vector<const char*> argv{"metric-lines"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(verify, in, out, err);
    if (lines_cmd->parsed()) return cmd_lines(lines, out);
    if (family_cmd->parsed()) return cmd_family(family_list, family_emit, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(enumerate, out);
    if (claims_cmd->parsed()) return cmd_claims(claims_range, claims_jobs, out);
    if (profile_cmd->parsed()) return cmd_profile(profile_n_max, profile_output, profile_jobs, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace metric_lines::cli
