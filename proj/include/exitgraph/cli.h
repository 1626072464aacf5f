#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exitgraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitPropertyViolation = 2;

/// Runs one command line (without the program name) and returns the exit
/// code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exitgraph
