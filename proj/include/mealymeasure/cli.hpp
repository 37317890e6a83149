#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mealy {

// Runs one CLI invocation (argv without the program name). Writes reports to
// `out` and diagnostics to `err`. Exit codes: 0 ok (including Unknown
// verdicts), 1 usage, 2 parse error, 3 violated mathematical precondition.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mealy
