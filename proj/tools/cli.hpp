#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gossamer::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit status:
/// 0 pass, 1 a verified property failed, 2 usage or malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gossamer::cli
