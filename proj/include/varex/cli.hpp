#pragma once

#include <string>
#include <vector>

namespace varex::cli {

/// Entry point shared by the binary and the tests. Returns 0 on success,
/// 1 on a usage error, 2 on a numerical failure.
int run(const std::vector<std::string>& args);

}  // namespace varex::cli
