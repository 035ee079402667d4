#ifndef KLSPARSE_CLI_H_
#define KLSPARSE_CLI_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace klsparse {

enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 1,
  kExitConfigError = 2,
  kExitIoError = 3,
};

// Entry point of the `klsparse` tool; `args` excludes the program name.
// Reads the edge list from the positional path, or from `in` when the path is
// absent or "-".
int RunCommandLine(const std::vector<std::string>& args, std::istream& in,
                   std::ostream& out, std::ostream& err);

}  // namespace klsparse

#endif  // KLSPARSE_CLI_H_
