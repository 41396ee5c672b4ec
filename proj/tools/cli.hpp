#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starrees::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kResource = 3;

// Runs the command line; input documents named "-" (or omitted) come from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace starrees::cli
