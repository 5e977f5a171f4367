#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace horo::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFeasibility = 2,
    kQuadrature = 3,
    kUsage = 64,
    kIo = 74,
};

/// Runs the horo command line (arguments exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horo::cli
