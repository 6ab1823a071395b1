#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qnsd::cli {

// Parses `args` (subcommand first, no program name), dispatches, and
// returns the exit code.  Honors --out by redirecting the data section.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qnsd::cli
