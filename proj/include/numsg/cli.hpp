#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numsg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitCounterexample = 3;

/// Runs one command. `args` excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace numsg::cli
