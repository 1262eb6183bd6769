#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liaset {

// Batch front end behind the `liaset` binary. `args` excludes the program
// name. Each command prints its result as one line of JSON on `out`;
// diagnostics go to `err`. Returns the process exit code: 0 for true or
// success, 1 for a false decision or failed verification, 2 for any error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace liaset
