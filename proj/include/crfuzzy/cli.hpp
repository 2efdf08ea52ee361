#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crfuzzy {

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit status. Normal output goes to `out` unless --output
/// names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crfuzzy
