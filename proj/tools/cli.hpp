#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqb::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // gram failure / search not converged
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitIo = 3;

/// Runs one CLI invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqb::cli
