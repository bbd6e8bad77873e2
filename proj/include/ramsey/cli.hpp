#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kCapacityExceeded = 3,
};

/// Runs the command line `args` (without the program name). A FILE argument
/// that is omitted or "-" reads from `in`; documents go to `out` unless an
/// --out file is given, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ramsey::cli
