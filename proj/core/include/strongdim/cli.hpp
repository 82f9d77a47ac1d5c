#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smd {

/// Runs the command-line interface on the given arguments (program name
/// excluded). Exit codes: 0 success / theorem verified, 1 verification found
/// a counterexample, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smd
