#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lincolor::cli {

struct VerifyOptions {
  /// Overrides the suite's default sweep size (max vertices, or max k for suns).
  std::optional<std::size_t> max_n;
  std::uint64_t seed = 1;
  /// Overrides the suite's default sample count for generator-based checks.
  std::optional<std::size_t> samples;
};

/// Outcome of one named claim inside a suite.
struct ClaimResult {
  std::string suite;
  std::string claim;
  std::size_t checked = 0;
  std::size_t passed = 0;
  /// Extra report lines (per-size counts, graphs found, ...).
  std::vector<std::string> notes;
  std::optional<std::string> counterexample;
  bool ok() const { return passed == checked && !counterexample; }
};

/// Suite names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws InputError for unknown names.
std::vector<ClaimResult> run_suite(const std::string& name, const VerifyOptions& options);

void print_results(std::ostream& out, const std::vector<ClaimResult>& results);

}  // namespace lincolor::cli
