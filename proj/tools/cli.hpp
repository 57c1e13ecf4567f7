#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace treeramsey::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUndecided = 2, kUsage = 3 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treeramsey::cli
