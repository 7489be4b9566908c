#pragma once

#include <limits>
#include <vector>

#include "hypermap/embedder.hpp"
#include "hypermap/metrics.hpp"

namespace hypermap {

enum class TemperatureStatus {
  kConverged,        // curves at low T agree and a best fit was found
  kUnverified,       // single grid value, returned as is
  kNoStableEstimate  // the lowest two curves already disagree
};

const char* to_string(TemperatureStatus s);

struct TemperatureOptions {
  double convergence_tolerance = 0.02;
  std::uint64_t min_pairs = 100;
  /// Distance window [tail_begin, tail_end) used for the squared-error fit.
  double tail_begin = 0.0;
  double tail_end = std::numeric_limits<double>::infinity();
  double bin_width = 1.0;
  EmbedOptions embed;
};

struct TemperatureEstimate {
  TemperatureStatus status = TemperatureStatus::kNoStableEstimate;
  double T = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> grid;  // ascending
  std::vector<ConnectionProbabilityCurve> curves;
  /// Sup-norm between curves k and k + 1.
  std::vector<double> successive_distance;
  /// Number of lowest-T curves that agree pairwise in sequence.
  std::size_t converged_count = 0;
  /// Squared error of each grid T's theoretical curve against the reference.
  std::vector<double> fit_error;
};

/// Embeds at every grid temperature, finds the low-T run of mutually
/// agreeing empirical curves, and returns the grid T whose theoretical
/// curve best fits the highest-T member of that run.
TemperatureEstimate infer_temperature(const AdjacencySnapshot& net, const ModelParams& params,
                                      std::vector<double> grid, const TemperatureOptions& options = {});

}  // namespace hypermap
