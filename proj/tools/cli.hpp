#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace airylab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitUsage = 64;

// Runs one command line (without the program name). Results go to stdout,
// diagnostics to stderr.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args);

}  // namespace airylab::cli
