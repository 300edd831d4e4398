#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace strongcolor {

enum ExitCode : int {
  kExitOk = 0,
  kExitDisagreement = 1,  // verification failed or fast path disagrees with the oracle
  kExitInputError = 2,
  kExitInconclusive = 3,  // oracle budget exhausted
};

struct RunConfig {
  std::string command;
  std::string input = "-";
  bool json = false;
  bool color = false;
  bool verify = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000'000;
  int depth = 3;
  int leaf_size = 5;
  std::uint64_t count = 1;
  int min_exponent = 4;
  int max_exponent = 6;
};

/// Parses arguments and runs one command. `in` stands in for standard input
/// when the input path is `-`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int run_command(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace strongcolor
