#pragma once

#include <string>
#include <vector>

namespace progdisc {

// Stable exit-code contract of the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitOutputError = 3;

struct CliResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// Runs one tool invocation; args excludes the program name. Files requested
// with --output are written as a side effect, everything terminal-bound
// comes back in the result.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace progdisc
