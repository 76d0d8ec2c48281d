#pragma once

#include <iosfwd>
#include <span>

#include "metric_lines/verifier.hpp"

namespace metric_lines {

/// Human-readable summary; no timing, so the bytes depend only on the input.
void write_report_text(std::ostream& out, const VerificationReport& report);

/// Header "n,graph6,edges,diameter,line_count,universal,family,violation",
/// one row per exception across all reports.
void write_reports_csv(std::ostream& out, std::span<const VerificationReport> reports);

/// Totals and exceptions per n. Line lists are written for every exception
/// when dump_lines is set, and always for violations.
void write_reports_json(std::ostream& out, std::span<const VerificationReport> reports, bool dump_lines);

void write_claims_text(std::ostream& out, const ClaimReport& report);

/// Header "n,min_lines,graph6".
void write_profile_csv(std::ostream& out, std::span<const ProfileRow> rows);

}  // namespace metric_lines
