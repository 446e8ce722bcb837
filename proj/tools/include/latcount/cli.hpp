#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latcount {

/// Runs one CLI invocation; args excludes the program name. Returns the
/// exit status: 0 success, 1 invalid input, 2 violated precondition.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace latcount
