#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zigzag {

// Entry point shared by the binary and the in-process tests. `args` excludes
// the program name. Exit codes: 0 success, 2 malformed input, 3 metric/quiver
// mismatch, 4 oracle budget exceeded, 1 verification failure or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zigzag
