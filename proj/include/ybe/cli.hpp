#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command; args excludes the program name. A path of "-" reads a
/// solution file from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ybe::cli
