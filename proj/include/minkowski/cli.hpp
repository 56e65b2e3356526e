#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minkowski::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kBudgetExhausted = 3;

/// Runs one invocation; args excludes the program name. Records go to `out`,
/// diagnostics and warnings (one line each) to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minkowski::cli
