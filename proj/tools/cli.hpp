#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace primepoly::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyViolation = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kBudgetExhausted = 3;

// Runs one command line (without the program name). The report goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primepoly::cli
