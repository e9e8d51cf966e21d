#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liebranch::cli {

/// Exit codes: 0 success, 2 parse or validation failure, 3 method
/// disagreement under `branch --method all`, 4 numerical residual or
/// convergence failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liebranch::cli
