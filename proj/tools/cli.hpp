#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pencilrank::cli {

enum ExitCode : int { ok = 0, usage = 1, input = 2, internal = 3 };

/// Fixed seed used by randomized commands when --seed is absent.
inline constexpr unsigned long long kDefaultSeed = 20240607ULL;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pencilrank::cli
