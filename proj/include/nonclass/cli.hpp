#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nonclass {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCutoff = 3;

/// Entry point of the `nonclass` tool. args excludes the program name.
///   analyze <spec> [--samples N] [--seed S]
///   sweep <spec> --out <csv|->
///   selftest
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonclass
