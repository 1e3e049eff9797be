#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "witt/errors.hpp"

namespace witt {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitRejected = 2,
    kExitCertification = 3,
    kExitUsage = 64,
};

int exit_code_for(Errc code) noexcept;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace witt
