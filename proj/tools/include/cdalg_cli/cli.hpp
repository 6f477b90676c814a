#ifndef CDALG_CLI_HPP
#define CDALG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cdalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoSolution = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
/// Exit codes: 0 success, 1 empty solution set (still printed), 2 usage or
/// parse error (message on `err`).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdalg::cli

#endif
