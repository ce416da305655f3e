#pragma once

#include <string>
#include <vector>

namespace loopforge {

/// CLI entry point.  Exit codes: 0 success, 1 validation failure, 2 cap
/// exceeded, 64 usage error.
int run(const std::vector<std::string>& args);

}  // namespace loopforge
