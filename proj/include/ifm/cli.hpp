#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ifm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kMathError = 3;
inline constexpr int kNotConverged = 4;
inline constexpr int kOracleMismatch = 5;

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifm::cli
