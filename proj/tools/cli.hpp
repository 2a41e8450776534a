#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,    // PASS / success
  kFail = 1,       // verified FAIL
  kUsage = 2,      // usage, domain, parse or oracle-budget error
  kExhausted = 3,  // search budget exhausted without a result
};

// Runs one invocation. `args` excludes the program name. Primary output goes
// to `out`; human-readable tables, diagnostics and the run manifest go to `err`
// unless --manifest names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbow::cli
