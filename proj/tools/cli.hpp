#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rca::cli {

/// Process exit codes.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_parse = 2,
  exit_semantic = 3,
  exit_resource = 4,
};

/// Runs one invocation. `args` excludes the program name. Output goes to
/// `out` only on success; failures write a single "error: <kind>: <message>"
/// line to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rca::cli
