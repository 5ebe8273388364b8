#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert::cli {

// Runs one subcommand. args excludes the program name. Returns the exit
// code: 0 on success, 1 on a failed check or broken invariant, 2 on a usage
// error or invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schubert::cli
