#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctx::cli {

// Stable exit-code contract.
enum ExitCode : int {
  kOk = 0,             // valid / noncontextual / crosscheck clean
  kValidation = 1,     // validate() violations or crosscheck disagreements
  kUsage = 2,          // bad flags, unreadable or malformed input
  kContextual = 3,
  kModeMismatch = 4,   // traditional mode on an inconsistently connected system
  kShapeMismatch = 5,  // chsh on a system that is not rank-4 cyclic
};

/// Runs one invocation. `args` excludes the program name. Input path "-"
/// reads `in`; output path "-" (the default) writes `out`; diagnostics go to
/// `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ctx::cli
