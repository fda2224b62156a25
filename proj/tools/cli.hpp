#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padicop::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,
    kRefusal = 2,
    kPrecisionExhausted = 3,
};

/// Runs one command line (args excludes the program name). JSON results go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace padicop::cli
