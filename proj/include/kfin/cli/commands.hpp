#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kfin/decision.hpp"
#include "kfin/rational.hpp"

namespace kfin::cli {

inline constexpr int kExitKF = 0;
inline constexpr int kExitNotKF = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitMalformed = 64;
inline constexpr int kExitPrecondition = 65;
inline constexpr int kExitInternal = 70;

enum class Format { Json, Text };

// What a command prints on stdout and the process exit status.
struct CommandOutput {
  int exit_code = 0;
  std::string text;
};

struct DecideOptions {
  std::optional<std::string> point;
  std::optional<long> max_k = kDefaultCap;  // nullopt: uncapped
  std::optional<long> ell;
  Format format = Format::Json;
};

struct SweepAxis {
  std::string name;  // "a", "b" or "c"
  std::vector<Rational> values;
};

struct SweepOptions {
  std::string stratum;
  int n = 3;
  std::vector<SweepAxis> grid;
  // Families without a closed-form order (the tower-based searches) are
  // expensive per k, so sweeps default to a small cap.
  long max_k = 20;
  int jobs = 1;
  Format format = Format::Json;
};

// "a=-2..2" (integer range, inclusive) or "a=1,5/2,3".
SweepAxis parse_axis(const std::string& text);

int exit_code_for(Outcome o);

CommandOutput cmd_decide(const std::string& input, const DecideOptions& opts);
CommandOutput cmd_classify(const std::string& input, const std::vector<std::string>& points, Format format);
CommandOutput cmd_semigroup(const std::string& input, const std::string& point, int k_max, Format format);
CommandOutput cmd_sweep(const SweepOptions& opts);
CommandOutput cmd_locus(const std::string& stratum, int n, Format format);
// Writes the representative curve of a StratumSpec as a CurveSpec.
CommandOutput cmd_export(const std::string& input);

}  // namespace kfin::cli
