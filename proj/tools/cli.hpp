#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace majdist::cli {

// Runs one command line (args excludes the program name). Documents go to
// out unless --out names a file; diagnostics and usage go to err.
// Returns 0 on success, 1 on a verification mismatch, 2 on bad input.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace majdist::cli
