#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzyspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitUsage = 64;

/// Environment variable that overrides the default tolerance of every subcommand.
inline constexpr const char* kToleranceEnv = "FUZZYSPEC_TOL";

/// Runs one command line (without the program name). Data goes to out unless
/// --output is given; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzyspec::cli
