// cli.hpp: `twospin` command-line front end

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twospin::cli {

// 0 success, 1 failed check, 2 bad arguments or violated invariant.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// args excludes the program name. CSV goes to `out` when no output file is
// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "min:max:points" (linear, inclusive) or "v1,v2,...". Throws std::invalid_argument.
std::vector<double> parse_grid(const std::string& text);

// Four comma-separated reals a,b,c,d.
std::vector<double> parse_list(const std::string& text);

}  // namespace twospin::cli
