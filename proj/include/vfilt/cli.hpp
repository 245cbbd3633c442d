#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vfilt {

enum ExitCode { exit_ok = 0, exit_internal = 1, exit_invalid_config = 2, exit_check_failed = 3 };

/// Suites accepted by `verify --suite`; "all" runs each in this order.
const std::vector<std::string>& suite_names();

/// Entry point of the `vfilt` tool. args excludes the program name. Results
/// go to --output or `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vfilt
