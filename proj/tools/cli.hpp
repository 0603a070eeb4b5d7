#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringsum::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kParse = 2, kUnsupported = 3, kResource = 4 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringsum::cli
