#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir::cli {

/// Runs one command line (args excludes the program name). Exit codes: 0
/// success, 1 validation or parse failure, 2 computation failure.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
