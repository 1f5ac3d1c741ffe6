#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace redwords {

// Dispatches one CLI invocation; args excludes the program name.  Returns
// the process exit code: 0 success/holds, 1 usage or input error,
// 2 counterexample or oracle disagreement, 3 resource limit exceeded.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redwords
