// Command-line front end. Exit codes: 0 success, 1 check failure or I/O
// error, 2 usage error, 3 budget exceeded.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tlent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlent::cli
