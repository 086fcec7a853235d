#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace thinbase::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInfeasible = 3 };

// Parses a real number written as an arithmetic expression over decimals,
// sqrt, pi, + - * / and parentheses: "1.5", "2/sqrt3", "2*sqrt(2)",
// "7/(2 sqrt3)" (juxtaposition multiplies). Throws std::invalid_argument.
double parse_real(std::string_view text);

// Runs one command line (args excludes the program name). The payload goes to
// `out` only when the exit code is 0 or 1; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace thinbase::cli
