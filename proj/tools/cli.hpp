#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace metricsat::cli {

enum ExitCode : int { kAffirmative = 0, kNegative = 1, kError = 2 };

struct RunConfig {
  std::string command;
  /// Positional arguments after the command: input paths, or for `gen` and
  /// `sweep` the kind followed by its parameters.
  std::vector<std::string> args;
  std::string output; // empty: standard output
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000;
  std::size_t k = 6;
  std::size_t r = 3;
  std::size_t ceiling = 6;
  unsigned jobs = 1;
  bool csv = false;
  bool no_validate = false;
  bool slow = false;
  bool graph = false;
};

/// Parses argv-style arguments (without the program name). Throws
/// CLI::ParseError on bad usage.
RunConfig parse_args(const std::vector<std::string> &argv);

/// Executes one command. Inputs named "-" (or omitted) are read from `in`.
/// Returns kAffirmative, kNegative or kError; diagnostics go to `err`.
int run(const RunConfig &config, std::istream &in, std::ostream &out,
        std::ostream &err);

/// parse_args + run, mapping usage errors to kError.
int main_with_args(const std::vector<std::string> &argv, std::istream &in,
                   std::ostream &out, std::ostream &err);

} // namespace metricsat::cli
