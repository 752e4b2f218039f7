#pragma once

#include "vtangle/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vtangle::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kSingularInput = 3,
  kFuzzCounterexample = 4,
  kGluing = 5,
};

enum class Format { Text, Json };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  Rational a{1};
  Rational b{1};
  std::uint64_t seed = 0;
  std::size_t steps = 200;
  std::size_t trials = 50;
  std::size_t cap = 24;
  Format format = Format::Text;
  long gen_a = 0;
  long gen_b = 0;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

int cmd_compute(const RunConfig& cfg, Streams io);
int cmd_fuzz(const RunConfig& cfg, Streams io);
int cmd_sum(const RunConfig& cfg, Streams io);
int cmd_derivative(const RunConfig& cfg, Streams io);
int cmd_gen(const RunConfig& cfg, Streams io);

/// Parses argv and dispatches. argv[0] is the program name.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace vtangle::cli
