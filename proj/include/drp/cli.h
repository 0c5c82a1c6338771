#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace drp::cli {

enum exit_code : int {
  kYes = 0,           // robust / route found
  kNo = 1,            // not robust / no route
  kUsage = 2,         // usage, parse or contract error
  kBudget = 3,        // exhaustive search exceeded its budget
  kDisagreement = 4,  // --all-check found conflicting answers
};

// Runs the command line (without the program name) and returns the exit
// status. All output goes to `out` and `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace drp::cli
