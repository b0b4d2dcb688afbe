#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glq::cli {

enum ExitCode { ok = 0, input_error = 2, infeasible = 3 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glq::cli
