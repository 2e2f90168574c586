#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace neflab::cli {

enum ExitCode : int {
  kNef = 0,
  kOk = 0,
  kNotNef = 1,
  kCheckFailed = 1,  // interp verify with failing cells
  kUnknown = 2,
  kInputError = 3,
  kIoError = 4,
  kUsage = 64,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace neflab::cli
