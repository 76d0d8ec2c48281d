#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metric_lines::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `metric-lines` binary. `args` excludes the program
/// name. Exit codes: 0 success, 1 violation or suite failure, 2 usage or I/O.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace metric_lines::cli
