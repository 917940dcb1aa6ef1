#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hankelcat {

/// Runs the command-line front end on argv-style arguments (program name
/// excluded) and returns the process exit code:
///   0  success (for verify: every grid point agrees)
///   1  data-level failure (short sequence, unreadable/malformed input,
///      consistency disagreement)
///   2  usage error (bad flags, method unavailable for the sequence)
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hankelcat
