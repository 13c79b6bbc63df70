#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boardforge {

/// Exit codes: 0 success, 1 parse/module/usage error, 2 validation violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boardforge
