#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superweyl::cli {

/// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;  // selftest found a failing criterion
constexpr int kPrecondition = 2;
constexpr int kUsage = 64;
constexpr int kInternal = 70;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superweyl::cli
