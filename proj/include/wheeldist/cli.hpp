#pragma once

#include <iosfwd>

namespace wheeldist {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitUsage = 2, kExitIo = 3 };

/// Entry point shared by the wheeldist executable and the CLI tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wheeldist
