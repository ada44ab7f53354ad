#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kInputError = 2 };

/// Everything a run depends on; echoed into every report.
struct RunConfig {
  std::string command;
  std::string input;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  double h = 1e-4;
  std::size_t k = 0, l = 0;  // local only
  std::string output;        // empty: standard output
};

/// Runs `toric <args...>` (args excludes the program name). The report goes
/// to `out` (or the --output file), diagnostics to `err`. With TORIC_VERBOSE
/// set, progress notes go to `err` as well; reports never depend on it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
