#pragma once

#include <ostream>

namespace hlmaj {

enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 2,
    kExitBound = 3,
    kExitDisagreement = 4,
    kExitVerification = 5,
};

/// Entry point of the hlmaj command line tool, writing to the given
/// streams instead of stdout/stderr.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hlmaj
