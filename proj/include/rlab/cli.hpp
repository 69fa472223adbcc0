#pragma once

#include <string>
#include <vector>

namespace rlab::cli {

// Parses and runs one invocation. Exit codes: 0 success (negative
// mathematical answers included), 2 bad input or violated precondition,
// 3 inconclusive (budget exhausted).
int run(const std::vector<std::string>& args);

} // namespace rlab::cli
