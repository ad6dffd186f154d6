#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trimult::cli {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int mismatch = 1;           // verification / cross-check failed
inline constexpr int square_k = 2;           // informational: k is a perfect square
inline constexpr int detection_failure = 3;  // rank/cap problems
inline constexpr int usage = 64;
}  // namespace exit_code

/// Full command dispatch, exposed for tests. `args` excludes the program
/// name; output and diagnostics go to the supplied streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trimult::cli
