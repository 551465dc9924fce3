#pragma once

#include "lincolor/graph.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace lincolor::cli {

/// Size limits for the exponential parts of `analyze`.
struct SizeGuards {
  std::size_t exact_numbers = 16;   // chi, omega, alpha
  std::size_t brute_lambda = 8;     // partition-search lambda
  std::size_t hereditary = 10;      // co-linear / linear sweeps
};

struct AnalyzeOptions {
  std::string id = "graph";
  bool deep = false;
  bool force = false;
  SizeGuards guards;
};

/// A computation was refused because the graph exceeds a size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds the analysis report; field layout is documented in
/// docs/analysis_report.schema.json.
nlohmann::json analyze(const Graph& g, const AnalyzeOptions& options);

/// Human-readable rendering of an analysis report.
std::string render_pretty(const nlohmann::json& report);

}  // namespace lincolor::cli
