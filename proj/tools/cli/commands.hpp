#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vlp::cli {

enum ExitCode : int { ok = 0, usage = 1, indeterminate = 2, precondition = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vlp::cli
