#ifndef SEGRE_CLI_HPP
#define SEGRE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace segre::cli {

/// Exit codes of the command-line surface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCrossCheck = 2;
inline constexpr int kExitBudget = 3;

/// Runs one invocation; `args` excludes the program name. Output is written
/// to `out`, diagnostics to `err`. Deterministic: identical invocations
/// produce byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segre::cli

#endif
