#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaf::cli {

inline constexpr const char* kToolName = "gafsim";
inline constexpr const char* kToolVersion = "0.1.0";

// Runs one tool invocation. `args` excludes the program name. Exit codes:
// 0 success / feasible, 1 infeasible or disconnected finding, 2 usage or
// configuration error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gaf::cli
