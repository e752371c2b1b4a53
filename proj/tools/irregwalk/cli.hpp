#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace irregwalk::cli {

enum ExitCode { Ok = 0, Negative = 1, Usage = 2, VerificationFailed = 3 };

/// Worker count from IRREGWALK_WORKERS, at least 1.
int workers_from_env();

/// Entry point of the `irregwalk` tool; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace irregwalk::cli
