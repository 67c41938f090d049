#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wdc {

// Exit statuses of the command-line front end.
enum ExitStatus : int {
  kExitPass = 0,
  kExitFailure = 1,  // verified failure or counterexample; a reproduction bundle is written
  kExitUsage = 2,    // bad flags or bad input
};

// Verbs: generate, stats, color, verify, oracle, audit.  `args` excludes the
// program name.  Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wdc
