#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geodex::cli {

inline constexpr const char* kReportSchema = "geodex-report/1";

enum ExitCode : int { kSuccess = 0, kInputError = 1, kConsistencyError = 2 };

// args excludes the program name. Reports go to `out`, diagnostics to `err`;
// `in` backs the "-" graph argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace geodex::cli
