#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace monomatch::cli {

enum class Mode { seq, par, both };

std::string to_string(Mode mode);

enum ExitStatus : int {
  kMatched = 0,
  kNoMatch = 1,
  kUsageOrIoError = 2,
  kDivergence = 3,
};

// One record per input.
struct MatchReport {
  std::string path;
  std::size_t target_length = 0;
  std::vector<std::size_t> indices;
  std::size_t count = 0;
  Mode mode = Mode::par;
  std::optional<double> seq_ms;
  std::optional<double> par_ms;
};

// {"path":..,"target_length":..,"indices":[..],"count":..,"mode":"seq|par|both",
//  "timings":{"seq_ms":..,"par_ms":..}}   ("timings" holds only the modes run)
std::string to_json(const MatchReport& report);

// Runs the tool. `args` excludes the program name. Standard input is only
// read when no input path is given (or a path is "-").
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace monomatch::cli
