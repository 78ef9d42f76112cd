#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftfam {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitDomain = 3 };

/// Runs the command line `args` (program name excluded). The envelope or CSV
/// goes to `out`, warnings and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftfam
