#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invdiff::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitPropertyFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invdiff::cli
