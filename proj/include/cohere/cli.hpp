#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohere::cli {

enum ExitCode : int { kPositive = 0, kNegative = 1, kInputError = 2 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cohere::cli
