#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lambda::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kResourceError = 2 };

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lambda::cli
