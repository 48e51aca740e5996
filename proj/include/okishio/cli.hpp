#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace okishio::cli {

/// Stable exit codes for scripting.
enum ExitCode : int {
    kSuccess = 0,
    kGoldenMismatch = 1,
    kInvalidInput = 2,
    kGuaranteeViolated = 3,
};

/// Residual tolerance used by the CLI; `OKISHIO_LAB_TOL` overrides it.
double residual_tolerance();

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace okishio::cli
