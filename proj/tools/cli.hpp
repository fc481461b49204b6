#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turancover::cli {

/// Runs one command line (args excludes the program name) against the given
/// streams and returns the process exit code. Output is written only after
/// the command completes, so a failing command leaves `out` untouched.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace turancover::cli
