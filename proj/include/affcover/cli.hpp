// Command-line front end: `affcover <subcommand> [flags]`.
//
// Machine output is JSON on `out` (tables may also be markdown or csv), human
// summaries go to `err`. Exit codes: 0 success, 1 negative result, 2 usage or
// input error, 3 budget exhausted.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

} // namespace affcover::cli
