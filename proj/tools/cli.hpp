#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rainbowlab::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitError = 2;

/// Runs one subcommand. args excludes the program name. The run report goes to
/// `out`; usage and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbowlab::cli
