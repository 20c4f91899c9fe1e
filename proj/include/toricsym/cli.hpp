#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toricsym {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitVerificationFailed = 2,
    kExitBoundExhausted = 3,
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricsym
