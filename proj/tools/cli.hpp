#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lozenge::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kCapExceeded = 3,
};

/// Runs the tool on `args` (without the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lozenge::cli
