#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swapplanarity {

// Exit codes shared by every subcommand. verify and equiv use their own
// result-dependent codes on success.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitMalformed = 3;
inline constexpr int kExitInvalidInstance = 4;

/// Runs the command line. args[0] is the program name. Files named "-" mean
/// stdin/stdout.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swapplanarity
