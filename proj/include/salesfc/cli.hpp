#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace salesfc::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kRuntimeError = 1;
inline constexpr int kUsageError = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace salesfc::cli
