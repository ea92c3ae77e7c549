#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quintic::cli {

/// Runs one CLI invocation (argv without the program name) against the
/// given streams.  Exit codes: 0 success, 2 usage or domain error,
/// 3 fixture violation, 4 inconclusive certification.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace quintic::cli
