#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scalar::cli {

enum ExitCode : int { kPass = 0, kParseError = 2, kInvariant = 3, kUnsupported = 4 };

/// Runs one command line (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scalar::cli
