#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dasmr::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
/// `plan` finished but the goal was not reached.
inline constexpr int kExitNotReached = 3;

/// Runs the dasmr command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dasmr::cli
