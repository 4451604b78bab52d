#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it with in-memory streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace trisurg::cli {

enum ExitCode : int {
  Ok = 0,
  ParseFailure = 1,
  ValidationFailure = 2,
  PreconditionFailure = 3,
  ReplayMismatch = 4,
};

/// args excludes the program name. Reports go to `out`, usage errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trisurg::cli
