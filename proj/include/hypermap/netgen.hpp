#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypermap/embedding.hpp"
#include "hypermap/graph.hpp"
#include "hypermap/params.hpp"

namespace hypermap {

enum class ModelKind { kPSO, kGeneralizedPSO, kEPSO };

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& name);

struct NodeTruth {
  std::int64_t birth = 1;  // 1..t
  double r_initial = 0.0;  // (2/zeta) ln birth
  double theta = 0.0;
};

/// A synthetic network with its ground-truth coordinates. Node v was born
/// at time v + 1.
struct GrownNetwork {
  ModelParams params;
  ModelKind kind = ModelKind::kEPSO;
  std::uint64_t seed = 0;
  std::vector<Edge> edges;  // sorted, first < second
  std::vector<NodeTruth> truth;
  /// Public node labels: a seeded shuffle of "1".."t", so label order
  /// carries no information about birth order.
  std::vector<std::string> labels;
  /// Internal-link steps abandoned at the attempt cap (GeneralizedPSO only).
  std::int64_t internal_link_shortfall = 0;

  AdjacencySnapshot snapshot() const;
  /// r_v(t) = beta r_v + (1 - beta) r_t.
  double final_radius(NodeId v) const;
};

/// Ground-truth coordinates at the final time as an Embedding.
Embedding truth_embedding(const GrownNetwork& net);

/// Grows a network node by node. Deterministic in (params, kind, seed);
/// `threads` only splits the per-node edge draws.
GrownNetwork grow(const ModelParams& params, ModelKind kind, std::uint64_t seed, int threads = 1);

}  // namespace hypermap
