#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace qparity {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Overrides the default --limit of every subcommand when set.
inline constexpr const char* kLimitEnvVar = "QPARITY_LIMIT";
inline constexpr std::size_t kDefaultLimit = 1000;
/// Largest limit `compute` accepts in the Integers domain.
inline constexpr std::size_t kComputeIntegerCap = 5000;

/* Runs the command line `qparity <args...>` (args excludes the program
 * name). Records go to `out` unless --out names a file; diagnostics go to
 * `err`. Returns 0 on success, 1 when a verification fails, 2 on usage
 * errors. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qparity
