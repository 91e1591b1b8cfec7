#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parteq {

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_limit = 3,
    exit_domain = 4,
    exit_integrity = 5,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace parteq
