#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fj::cli {

enum ExitCode { kOk = 0, kUsage = 1, kConstruction = 2, kOracle = 3 };

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fj::cli
