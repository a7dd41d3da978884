#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zf::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, budget_refused = 3 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zf::cli
