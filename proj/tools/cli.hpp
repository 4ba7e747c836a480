#ifndef NEUTRO_TOOLS_CLI_HPP
#define NEUTRO_TOOLS_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace neutro::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kInvariantViolation = 3,
};

struct RunConfig {
  std::string subcommand;
  int q = 255;
  int max_thresholds = 8;
  double min_prominence = 0.10;
  std::string input;
  std::string out;
  std::string curve_out;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
};

int cmd_curve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_threshold(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_segment(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_axioms(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace neutro::cli

#endif  // NEUTRO_TOOLS_CLI_HPP
