// Command-line front end: solve, verify, figure, density, limits.
//
// Exit codes: 0 success, 1 usage error, 2 domain or numerical error,
// 3 verification failure, 4 I/O error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qes::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kDomain = 2,
    kVerification = 3,
    kIo = 4,
};

/// Runs one invocation. `args` excludes the program name. Results go to `out`
/// unless --out is given; diagnostics go to `err` as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qes::cli
