#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdesign::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs one command line (without the program name) and returns the exit
/// code. Reports go to `out` unless --out names a file; diagnostics go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdesign::cli
