#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tritangent::cli {

// Runs one invocation. Returns the process exit status: 0 success,
// 1 domain error (module error name in the message), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tritangent::cli
