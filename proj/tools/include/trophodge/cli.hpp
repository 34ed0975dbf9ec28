#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trophodge::cli {

// exit codes
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trophodge::cli
