#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace locmouf {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one subcommand; `args` excludes the program name. The JSON report
/// goes to `out`, usage and input errors to `err`. Returns 0 when every
/// required check passes, 1 on a failed check and 2 on a usage or input
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locmouf
