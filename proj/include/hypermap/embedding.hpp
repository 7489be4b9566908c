#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypermap/geometry.hpp"
#include "hypermap/graph.hpp"
#include "hypermap/params.hpp"

namespace hypermap {

/// How an embedding was produced; serialized next to the coordinates.
struct EmbeddingProvenance {
  std::string method = "hypermap";
  std::vector<int> correction_degrees;
  std::vector<std::int64_t> correction_times;
  int correction_passes = 0;
  std::string grid_policy = "ceil(2*pi*i) points";
  std::string search = "branch-and-bound";
  double theta1 = 0.0;
  std::string params_source = "given";
  std::string gamma_fit;
  /// Fraction of grid angles within one nat of the best, for early nodes.
  std::vector<double> early_landscape_width;
  std::vector<std::string> warnings;
};

/// Hyperbolic coordinates for every node of a network at the final time.
struct Embedding {
  ModelParams params;
  std::vector<NodeId> order;       // order[k] is the node with rank k + 1
  std::vector<std::int64_t> rank;  // 1-based rank per node
  std::vector<double> radii;       // r_v(t) per node
  std::vector<double> angles;      // theta_v in [0, 2pi) per node
  EmbeddingProvenance provenance;

  std::size_t node_count() const { return radii.size(); }
  PolarPoint point(NodeId v) const { return {radii[v], angles[v]}; }
  double distance(NodeId a, NodeId b) const;
};

/// r(t) for a node of the given rank: beta (2/zeta) ln rank + (1-beta) (2/zeta) ln t.
double final_radius_for_rank(std::int64_t rank, const ModelParams& params);

}  // namespace hypermap
