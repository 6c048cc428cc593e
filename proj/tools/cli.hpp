#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kohnert::cli {

enum ExitCode : int {
    ok = 0,
    verification_failed = 1,
    usage_error = 2,
    theorem_fault = 3,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kohnert::cli
