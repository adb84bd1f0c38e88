#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qf {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    /// An identity failed or the search found a nontrivial solution.
    kExitFinding = 1,
    kExitUsage = 2,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qf
