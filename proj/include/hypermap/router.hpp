#pragma once

#include <cstdint>
#include <vector>

#include "hypermap/embedding.hpp"
#include "hypermap/graph.hpp"

namespace hypermap {

enum class RouteOutcome {
  kDelivered,
  kLocalMinimum,  // best neighbor was the previous hop
  kHopLimit,      // loop guard reached
};

const char* to_string(RouteOutcome o);

struct RouteResult {
  RouteOutcome outcome = RouteOutcome::kLocalMinimum;
  std::vector<NodeId> path;  // src first; ends at dst on success

  bool success() const { return outcome == RouteOutcome::kDelivered; }
  std::size_t hops() const { return path.empty() ? 0 : path.size() - 1; }
};

/// Modified greedy forwarding: move to the neighbor closest to dst (the
/// current node takes no part in the comparison); drop when that neighbor
/// is the previous hop. Distance ties go to the smaller rank. max_hops = 0
/// means the node count.
RouteResult greedy_route(NodeId src, NodeId dst, const AdjacencySnapshot& net, const Embedding& embedding,
                         std::size_t max_hops = 0);

struct PairPolicy {
  bool all_pairs = false;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;

  static PairPolicy all() { return {true, 0, 0}; }
  static PairPolicy sample(std::uint64_t n, std::uint64_t seed) { return {false, n, seed}; }
};

struct PairRoute {
  NodeId src;
  NodeId dst;
  RouteResult route;
  std::int32_t shortest = 0;  // BFS hops
};

struct RoutingStats {
  double p_s = 0.0;
  double h_bar = 0.0;
  double stretch = 0.0;
  std::uint64_t n_pairs = 0;
  std::uint64_t delivered = 0;
  std::uint64_t local_minimum_drops = 0;
  std::uint64_t hop_limit_drops = 0;
  std::size_t giant_size = 0;
  std::uint64_t seed = 0;
  std::vector<PairRoute> traces;  // filled when requested
};

/// Routes ordered pairs inside the giant component. Sampling more pairs
/// than exist evaluates all of them.
RoutingStats evaluate_routing(const AdjacencySnapshot& net, const Embedding& embedding,
                              const PairPolicy& policy = {}, int threads = 1, bool keep_traces = false);

}  // namespace hypermap
