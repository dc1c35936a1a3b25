#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torus {

// Command-line front end.  Exit codes: 0 success, 2 input or usage error,
// 3 internal cross-check failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace torus
