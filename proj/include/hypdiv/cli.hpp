#pragma once

#include <string>
#include <vector>

#include "hypdiv/error.hpp"

namespace hypdiv {

struct CommandResult {
  int exit_code = 0;
  std::string output;    // JSON document (or help text), newline terminated
  std::string out_path;  // --out, empty for stdout
};

/// 0 success, 1 input validation, 2 domain error, 3 budget or search exhaustion.
int exit_code_for(Errc code);

/// `args` excludes the program name. Writes nothing; callers route `output`.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace hypdiv
