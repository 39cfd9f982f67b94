#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steiner3::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 a checked property failed, 2 usage, format or range error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steiner3::cli
