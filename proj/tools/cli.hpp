#ifndef RADACT_TOOLS_CLI_HPP
#define RADACT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace radact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radact::cli

#endif  // RADACT_TOOLS_CLI_HPP
