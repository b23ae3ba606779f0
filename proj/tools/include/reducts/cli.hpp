#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reducts::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit status. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Version tag of the structured (JSON) output.
inline constexpr const char* kSchema = "reducts-cli/1";

} // namespace reducts::cli
