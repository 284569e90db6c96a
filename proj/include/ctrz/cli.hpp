#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctrz::cli {

/// Runs one command line (without the program name) and returns the exit code:
/// 0 ok, 1 validation findings, 2 input or usage error, 3 methods disagree.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctrz::cli
