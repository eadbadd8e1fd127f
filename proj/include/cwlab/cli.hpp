#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cwlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInvariantBreach = 3;

/// Runs the command line (args exclude the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err` prefixed "error:".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One line per invariant suite run by `verify`.
struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Every module invariant at reduced scale.
std::vector<CheckResult> run_verification_suite();

}  // namespace cwlab
