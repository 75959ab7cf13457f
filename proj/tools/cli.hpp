#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relating::cli {

// Exit codes shared by every subcommand.
enum Status {
  kRelating = 0,  // also: generic success
  kNotRelating = 1,
  kInputError = 2,
  kPreconditionViolation = 3,
  kCapExceeded = 4,
};

// Runs the tool on the given arguments (no program name). Reports go to
// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relating::cli
