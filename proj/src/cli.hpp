#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace confbetti::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 mathematical mismatch, 2 invalid invocation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confbetti::cli
