#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypermap/embedding.hpp"
#include "hypermap/graph.hpp"
#include "hypermap/likelihood_context.hpp"

namespace hypermap {

/// Empirical vs. theoretical connection probability per distance bin.
struct ConnectionProbabilityCurve {
  double bin_width = 1.0;
  std::vector<double> bin_edges;  // bins + 1 entries starting at 0
  std::vector<std::uint64_t> pair_counts;
  std::vector<std::uint64_t> linked_counts;
  std::vector<double> empirical;    // linked / pairs, 0 for empty bins
  std::vector<double> theoretical;  // exact sum at bin centers
  std::vector<double> theoretical_first_term;

  std::size_t bins() const { return pair_counts.size(); }
  double center(std::size_t b) const { return 0.5 * (bin_edges[b] + bin_edges[b + 1]); }
  std::uint64_t total_pairs() const;
  /// Largest |empirical - theoretical| over bins with at least min_pairs.
  double max_deviation(std::uint64_t min_pairs, GlobalProbability form = GlobalProbability::kExactSum) const;
};

ConnectionProbabilityCurve connection_curve(const Embedding& embedding, const AdjacencySnapshot& net,
                                            const LikelihoodContext& ctx, double bin_width = 1.0, int threads = 1);

/// Sup-norm between two empirical curves over bins where both have at
/// least min_pairs. Returns 0 when no bin qualifies.
double curve_distance(const ConnectionProbabilityCurve& a, const ConnectionProbabilityCurve& b,
                      std::uint64_t min_pairs);

/// Sum over all pairs of log p~ or log(1 - p~) at final-time distances.
double global_log_likelihood(const Embedding& embedding, const AdjacencySnapshot& net, const LikelihoodContext& ctx,
                             GlobalProbability form = GlobalProbability::kFirstTerm, int threads = 1);

/// Same, with explicit per-node radii and angles.
double global_log_likelihood(std::span<const double> radii, std::span<const double> angles,
                             const AdjacencySnapshot& net, const LikelihoodContext& ctx,
                             GlobalProbability form = GlobalProbability::kFirstTerm, int threads = 1);

struct LogLossReport {
  double ll_inf = 0.0;
  double ll_rand = 0.0;  // mean over draws
  double r_ll_exponent = 0.0;
  int n_rand = 0;
  std::uint64_t seed = 0;
  std::vector<double> ll_rand_draws;
};

/// Log loss with inferred angles against uniform random angles, radii kept.
LogLossReport logloss_report(const Embedding& embedding, const AdjacencySnapshot& net, const LikelihoodContext& ctx,
                             int n_rand = 10, std::uint64_t seed = 0, int threads = 1,
                             GlobalProbability form = GlobalProbability::kFirstTerm);

/// Same, with caller-supplied angle draws (one per-node vector per draw).
LogLossReport logloss_report(const Embedding& embedding, const AdjacencySnapshot& net, const LikelihoodContext& ctx,
                             const std::vector<std::vector<double>>& angle_draws, int threads = 1,
                             GlobalProbability form = GlobalProbability::kFirstTerm);

/// Mean of a per-node quantity over nodes of equal degree.
struct DegreeAverage {
  std::int64_t degree = 0;
  std::size_t count = 0;
  double value = 0.0;
};

struct TopologyStats {
  std::size_t node_count = 0;
  std::size_t giant_size = 0;
  double average_degree = 0.0;
  double average_clustering = 0.0;
  std::vector<DegreeAverage> degree_distribution;  // value = P(k)
  std::vector<DegreeAverage> clustering;           // c(k)
  std::vector<DegreeAverage> neighbor_degree;      // k_nn(k)
  std::vector<DegreeAverage> betweenness;          // B(k), giant component
  std::vector<double> distance_distribution;       // d(l) at index l, giant component
  std::vector<double> node_clustering;
  std::vector<double> node_betweenness;  // 0 outside the giant component
  /// Links to older nodes and their running mean under degree order,
  /// indexed by rank (entries 0 and 1 unused for m_tilde).
  std::vector<std::int64_t> links_to_older;
  std::vector<double> m_tilde;
};

TopologyStats topology_stats(const AdjacencySnapshot& net, int threads = 1);

/// One-sample KS statistic of final-time radii against the model density.
double radial_ks_statistic(std::span<const double> radii, const ModelParams& params);

}  // namespace hypermap
