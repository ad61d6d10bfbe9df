#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification or internal
// failure, 2 usage or input error.

#include <ostream>
#include <string>
#include <vector>

namespace ssg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssg::cli
