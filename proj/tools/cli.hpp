#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gvbps::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kParseFailure = 2,
  kPreconditionFailure = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`
/// unless --out names a file; diagnostics go to `err`. `in` backs --in -.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gvbps::cli
