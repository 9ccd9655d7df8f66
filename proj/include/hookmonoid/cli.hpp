#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hookmonoid::cli {

// Runs the command-line tool on already-split arguments (programs pass
// argv+1). Returns the process exit code: 0 success, 1 usage error,
// 2 internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hookmonoid::cli
