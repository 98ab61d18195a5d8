#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isbell {

/// Runs one CLI invocation.  Exit codes: 0 success, 1 validation or data
/// failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace isbell
