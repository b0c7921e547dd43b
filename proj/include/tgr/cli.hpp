#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgr::cli {

enum ExitCode : int {
    kYes = 0,       // YES / equal / valid
    kNo = 1,        // NO / unequal
    kUsage = 2,     // usage or validation error
    kBudget = 3,    // oracle budget exceeded
};

// Runs one command. `args` excludes the program name. Nothing is written to
// std::cout / std::cerr directly, so tests can capture both streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgr::cli
