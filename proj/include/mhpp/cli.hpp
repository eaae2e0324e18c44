#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mhpp::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadInput = 65;
inline constexpr int kExitGuard = 70;

/// Runs one command.  `args` excludes the program name.  JSON goes to `out`,
/// diagnostics to `err`; `in` is read when no -i path is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mhpp::cli
