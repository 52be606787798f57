#pragma once

#include <cstdint>
#include <string>

#include "chshkit/corrmodel.hpp"

namespace chsh {

// CLI exit codes (also the CommandResult codes): 0 success, 2 parse error,
// 3 domain-invariant violation, 4 internal numerical failure.
enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 2,
  kExitInvariantError = 3,
  kExitNumericalError = 4,
};

struct CommandResult {
  int code = kExitOk;
  std::string output;  // report payload (JSON or CSV) when code == 0
  std::string error;   // diagnostic for nonzero codes
};

CommandResult cmd_analyze(const std::string& input_path, Mode mode, double tol);
CommandResult cmd_generate(const std::string& kind, const std::string& spec_path);
CommandResult cmd_scan(const std::string& family, int steps, double tol);
CommandResult cmd_realize(const std::string& input_path, Mode mode, double tol);
CommandResult cmd_exercise(std::uint64_t samples, std::uint64_t seed);

}  // namespace chsh
