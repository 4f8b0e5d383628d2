#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specfactor::cli {

enum ExitCode : int {
  kOk = 0,
  kPrecondition = 2,
  kNumericalFailure = 3,
};

inline constexpr unsigned kDefaultMaxD = 20;

// Cap on d from SPECFACTOR_MAX_D (default 20).
unsigned max_qubits_from_env();

// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specfactor::cli
