#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace optbench {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitEnvironment = 3,
  kExitData = 4,
};

/// Runs the optbench command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace optbench
