#pragma once

#include <istream>
#include <string>
#include <vector>

namespace braidfgl::cli {

// 0 success, 1 domain or resource error, 2 usage error / malformed input.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs one command line (without the program name). Inputs given as "-"
// are read from `in`. Never throws.
CommandResult run(const std::vector<std::string>& args, std::istream& in);

}  // namespace braidfgl::cli
