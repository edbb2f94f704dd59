#pragma once

// Command-line front end. Primary output goes to out, diagnostics and
// timings to err.
//
// Exit codes: 0 success, 1 engines disagree, 2 bad arguments, 3 request
// outside the validity region of the chosen engine.

#include <iosfwd>
#include <string>
#include <vector>

namespace refsev {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace refsev
