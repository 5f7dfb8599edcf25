#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace towertab::cli {

// Run the command-line interface on `args` (without the program name).
// Returns the process exit code: 0 success, 1 domain error (one-line reason
// on `err`), 2 usage or input parse error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace towertab::cli
