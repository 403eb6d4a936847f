#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repkit::cli {

/// Runs one command line (args[0] is the program name). Reports go to `out`
/// unless --output is given; usage messages go to `err`.
/// Exit codes: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repkit::cli
