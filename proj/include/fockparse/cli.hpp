#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fockparse::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // rejection, precondition violation
inline constexpr int kExitUsage = 2;   // bad arguments, unreadable or malformed input

// Runs `fockparse <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockparse::cli
