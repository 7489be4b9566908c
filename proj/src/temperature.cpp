#include "hypermap/temperature.hpp"

#include <algorithm>
#include <cmath>

namespace hypermap {

const char* to_string(TemperatureStatus s) {
  switch (s) {
    case TemperatureStatus::kConverged:
      return "converged";
    case TemperatureStatus::kUnverified:
      return "convergence-unverified";
    case TemperatureStatus::kNoStableEstimate:
      return "no-stable-estimate";
  }
  return "unknown";
}

TemperatureEstimate infer_temperature(const AdjacencySnapshot& net, const ModelParams& params,
                                      std::vector<double> grid, const TemperatureOptions& options) {
  if (grid.empty()) throw ParameterError("temperature grid is empty");
  for (double T : grid) {
    if (!(T > 0.0 && T < 1.0)) throw ParameterError("grid temperatures must lie in (0, 1)");
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  TemperatureEstimate est;
  est.grid = grid;
  for (double T : grid) {
    ModelParams p = params;
    p.T = T;
    const auto e = embed(net, p, options.embed);
    const LikelihoodContext ctx(e.params);
    est.curves.push_back(connection_curve(e, net, ctx, options.bin_width, options.embed.threads));
  }
  if (grid.size() == 1) {
    est.status = TemperatureStatus::kUnverified;
    est.T = grid.front();
    est.converged_count = 1;
    return est;
  }

  est.converged_count = 1;
  bool agreeing = true;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const double d = curve_distance(est.curves[k], est.curves[k + 1], options.min_pairs);
    est.successive_distance.push_back(d);
    if (agreeing && d < options.convergence_tolerance) {
      ++est.converged_count;
    } else {
      agreeing = false;
    }
  }
  if (est.converged_count < 2) return est;

  const auto& reference = est.curves[est.converged_count - 1];
  double best = INFINITY;
  for (double T : grid) {
    ModelParams p = params;
    p.T = T;
    p.t = static_cast<std::int64_t>(net.node_count());
    const LikelihoodContext ctx(p);
    double sse = 0.0;
    for (std::size_t b = 0; b < reference.bins(); ++b) {
      const double x = reference.center(b);
      if (reference.pair_counts[b] < options.min_pairs || x < options.tail_begin || x >= options.tail_end) continue;
      const double diff = reference.empirical[b] - ctx.global_connection_probability(x);
      sse += diff * diff;
    }
    est.fit_error.push_back(sse);
    if (sse < best) {
      best = sse;
      est.T = T;
    }
  }
  est.status = TemperatureStatus::kConverged;
  return est;
}

}  // namespace hypermap
