#ifndef PEAKLAB_TOOLS_CLI_HPP
#define PEAKLAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace peaklab::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInvalidInput = 2,
  kResourceLimit = 3,
};

// Runs the peaklab command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peaklab::cli

#endif  // PEAKLAB_TOOLS_CLI_HPP
