#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpa::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;   // bad arguments, unreadable file, parse error
inline constexpr int kExitDomain = 2;  // well-formed input violating a precondition

/// Runs the `lpa` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli
