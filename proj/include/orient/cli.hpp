#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace orient {

// Runs one CLI invocation; writes a JSON report to `out` and
// diagnostics to `err`. Exit codes: 0 success, 1 infeasible or false
// answer, 2 input error, 3 size-cap error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err);

} // namespace orient
