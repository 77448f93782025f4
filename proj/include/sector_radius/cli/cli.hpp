#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sector_radius::cli {

enum ExitCode : int { ok = 0, computation_error = 1, usage_error = 2 };

/// Runs one command line (without the program name). Matrices are read from
/// `--in` (default "-", meaning `in`) and results written to `--out`
/// (default "-", meaning `out`). Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sector_radius::cli
