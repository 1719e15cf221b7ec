#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wonder {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs the command-line front end. `args` excludes the program name.
/// Exit code 0: all verdicts pass; 1: a mathematical verdict failed;
/// 2: usage, validation or budget error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wonder
