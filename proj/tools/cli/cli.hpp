#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gtsp/error.hpp"

namespace gtsp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kData = 2,
  kNumerical = 3,
};

ExitCode exit_code_for(ErrorCode code) noexcept;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtsp::cli
