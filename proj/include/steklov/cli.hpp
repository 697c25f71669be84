#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steklov::cli {

enum ExitCode : int { ok = 0, usage_error = 1, verification_failed = 2 };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// %.17g, the CSV number format.
std::string format_number(double x);

}  // namespace steklov::cli
