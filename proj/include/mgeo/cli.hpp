#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mgeo {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidSpace = 1;
inline constexpr int kExitUsage = 2;

/// Runs the CLI on args (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgeo
