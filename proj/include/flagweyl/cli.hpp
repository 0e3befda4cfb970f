#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagweyl::cli {

// Exit statuses.
inline constexpr int kOk = 0;        // success, or the verdict is true
inline constexpr int kVerdictFalse = 1;  // verdict false, or a counterexample was found
inline constexpr int kUsage = 2;     // bad arguments or unparsable input

// Runs the command line (args[0] is the program name). Diagnostics go to err
// as a single line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace flagweyl::cli
