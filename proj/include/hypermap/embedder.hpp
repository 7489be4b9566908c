#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypermap/angular_objective.hpp"
#include "hypermap/embedding.hpp"
#include "hypermap/graph.hpp"
#include "hypermap/params.hpp"

namespace hypermap {

struct EmbedOptions {
  /// A correction step runs once all nodes with degree >= d are placed.
  std::vector<int> correction_degrees{60, 40, 20, 10};
  int correction_passes = 4;
  double theta1 = 0.0;
  /// When set, theta1 is drawn uniformly from this seed instead.
  std::optional<std::uint64_t> random_theta1_seed;
  /// Fixed angular spacing; 0 means the default 1/i at time i.
  double fixed_spacing = 0.0;
  GridSearch search = GridSearch::kBranchAndBound;
  int threads = 1;
};

/// Node order by degree descending, ties by label ascending (numeric when
/// both labels are integers). order[k] has rank k + 1.
std::vector<NodeId> infer_birth_order(const AdjacencySnapshot& net);

/// Expected degree at which the likelihood is stationary in the radius for
/// a node of observed degree k: k - T/beta. A diagnostic; the ordering
/// above uses raw degrees.
double stationary_expected_degree(std::int64_t k, const ModelParams& params);

/// Placement state while replaying growth, indexed by rank.
class EmbeddingState {
 public:
  EmbeddingState(const AdjacencySnapshot& net, const ModelParams& params);

  const ModelParams& params() const { return params_; }
  std::int64_t size() const { return static_cast<std::int64_t>(order_.size()); }
  NodeId node(std::int64_t rank) const { return order_[static_cast<std::size_t>(rank - 1)]; }
  std::int64_t rank(NodeId v) const { return rank_[v]; }
  const std::vector<NodeId>& order() const { return order_; }

  double theta(std::int64_t rank) const { return theta_[static_cast<std::size_t>(rank)]; }
  void set_theta(std::int64_t rank, double theta) { theta_[static_cast<std::size_t>(rank)] = theta; }
  /// Initial radius (2/zeta) ln rank.
  double initial_radius(std::int64_t rank) const { return r_[static_cast<std::size_t>(rank)]; }
  /// R at birth time `rank` (rank >= 2).
  double radius_threshold(std::int64_t rank) const { return R_[static_cast<std::size_t>(rank)]; }
  std::int64_t placed() const { return placed_; }
  void set_placed(std::int64_t n) { placed_ = n; }

 private:
  ModelParams params_;
  std::vector<NodeId> order_;
  std::vector<std::int64_t> rank_;
  std::vector<double> theta_;
  std::vector<double> r_;
  std::vector<double> R_;
  std::int64_t placed_ = 0;
};

/// Log-likelihood of node `rank`'s links to all older nodes if it sits at
/// angle theta; older nodes use their radii at time `rank`.
AngularObjective local_objective(std::int64_t rank, const EmbeddingState& state, const AdjacencySnapshot& net);
double local_log_likelihood(std::int64_t rank, double theta, const EmbeddingState& state,
                            const AdjacencySnapshot& net);

/// Number of grid points at time i: ceil(2 pi / spacing) with spacing 1/i
/// unless a fixed spacing is given.
std::int64_t grid_size(std::int64_t i, double fixed_spacing = 0.0);

/// Best grid angle for node `rank` against the older nodes.
GridMaximum maximize_angle(std::int64_t rank, const EmbeddingState& state, const AdjacencySnapshot& net,
                           const EmbedOptions& options = {});

/// Objective for re-placing node j against every other placed node l <= i;
/// each pair uses the distance and R at the younger node's birth time.
AngularObjective correction_objective(std::int64_t j, std::int64_t current_rank, const EmbeddingState& state,
                                      const AdjacencySnapshot& net);

/// Re-maximizes the angle of every node 1..current_rank in rank order,
/// `passes` times. A node moves only if its objective strictly improves.
/// Returns the number of moved nodes.
std::int64_t correction_step(EmbeddingState& state, const AdjacencySnapshot& net, std::int64_t current_rank,
                             int passes, const EmbedOptions& options = {});

/// Ranks after which correction steps run for the given degree thresholds.
std::vector<std::int64_t> correction_times(const AdjacencySnapshot& net, const std::vector<int>& degrees);

/// Full growth replay. params.t is replaced by the node count.
Embedding embed(const AdjacencySnapshot& net, const ModelParams& params, const EmbedOptions& options = {});

/// Embedding with the given per-node angles and the rank radii of `order`.
Embedding embedding_from_angles(const AdjacencySnapshot& net, const ModelParams& params,
                                const std::vector<NodeId>& order, const std::vector<double>& angles);

/// Parameters guessed from the topology: m = min degree, L = (kbar - 2m)/2
/// floored at 0, gamma from a power-law tail fit; T and zeta are kept.
struct ParameterEstimate {
  ModelParams params;
  std::string gamma_fit;  // description of the tail fit
};
ParameterEstimate estimate_parameters(const AdjacencySnapshot& net, const ModelParams& base, bool estimate_m,
                                      bool estimate_L, bool estimate_gamma);

}  // namespace hypermap
