#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "espectra/error.hpp"

namespace espectra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResultant = 3;
inline constexpr int kExitRecovery = 4;
inline constexpr int kExitVerification = 5;

/// Exit status for a library error escaping a subcommand.
int exit_code_for(ErrorCode code);

/// Runs the command line (args[0] is the program name).  Reports go to
/// `out` as JSON, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace espectra::cli
