#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddcolor::cli {

/// Exit codes: 0 success, 1 semantic failure (invalid coloring, infeasible
/// orientation, unsupported density, exhausted budget), 2 parse or usage
/// error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. Graph input is read
/// from -i/--input or, if absent, from in; output goes to -o/--output or out.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace oddcolor::cli
