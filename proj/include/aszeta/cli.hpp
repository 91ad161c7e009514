#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "aszeta/curves.hpp"

namespace aszeta::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 2,
  kBudgetExceeded = 3,
  kBadInput = 4,
  kCacheCorruption = 5,
};

enum class Format { Human, Json, Csv };
Format parse_format(const std::string& s);

struct JobRequest {
  std::string command;  // count, deficits, lpoly, spectrum, verify-divides, verify-nondivides, verify-oracle, table
  std::string family = "C";
  std::uint64_t p = 3;
  unsigned k = 1;
  unsigned a = 1;
  unsigned n = 1;
  unsigned m = 1;
  unsigned l = 0;  // verify-nondivides: outer index
  std::string method = "formula";
  std::string expect;  // lpoly: reference polynomial to compare against
  Format format = Format::Human;
  std::uint64_t budget = kDefaultBudget;
  std::string cache_dir;
  int jobs = 0;

  /// Curve for the request's family/p/k/a; k is ignored for B0/C0.
  CurveSpec curve() const;
};

/// Executes one request. Output goes to `out`, diagnostics to `err`; the
/// return value is one of ExitCode.
int run(const JobRequest& request, std::ostream& out, std::ostream& err);

/// One row per n = 1..n_max: n, d, case, deficit_u, deficit_v, count.
std::string emit_table(const CurveSpec& spec, unsigned n_max, Format format);

/// Parses argv with CLI11 and dispatches to run().
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace aszeta::cli
