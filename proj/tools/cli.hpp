#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mahler::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNumerical = 3;

// Runs one command line (without the program name). JSON goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mahler::cli
