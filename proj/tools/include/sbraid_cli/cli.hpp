#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sbraid::cli {

enum ExitCode : int {
  kPass = 0,
  kFail = 1,   // a verification case failed or a resource limit was hit
  kUsage = 2,  // unknown subcommand or flag, bad parameters, unreadable input
};

// args excludes the program name.  Reports go to out, diagnostics to err.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbraid::cli
