#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polarmap::cli {

/// Exit statuses of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitMismatch = 2;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polarmap::cli
