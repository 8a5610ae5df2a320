#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tsg::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (arguments after the program name) and returns the
/// process exit code. Reads TSG_NODE_BUDGET from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsg::cli
