#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monomialis {

/// Runs the command-line front end and returns the process exit code:
///   0  success
///   2  formula/oracle mismatch or failed verification
///   3  capacity or time budget exceeded
///   4  precondition or usage error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace monomialis
