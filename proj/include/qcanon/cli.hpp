#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcanon::cli {

/// Exit codes: 0 success, 1 failed check or computation, 2 bad flags.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name).  Primary output
/// goes to out unless -o redirects it; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcanon::cli
