#include "hypermap/router.hpp"

#include <algorithm>
#include <cmath>

#include "hypermap/geometry.hpp"
#include "hypermap/params.hpp"
#include "hypermap/parallel.hpp"
#include "hypermap/rng.hpp"

namespace hypermap {

const char* to_string(RouteOutcome o) {
  switch (o) {
    case RouteOutcome::kDelivered:
      return "delivered";
    case RouteOutcome::kLocalMinimum:
      return "local-minimum";
    case RouteOutcome::kHopLimit:
      return "hop-limit";
  }
  return "unknown";
}

RouteResult greedy_route(NodeId src, NodeId dst, const AdjacencySnapshot& net, const Embedding& embedding,
                         std::size_t max_hops) {
  const std::size_t n = net.node_count();
  if (embedding.node_count() != n) throw ParameterError("embedding does not cover the network");
  if (src >= n || dst >= n) throw ParameterError("route endpoint out of range");
  if (src == dst) throw ParameterError("route endpoints must differ");
  if (max_hops == 0) max_hops = n;

  const double zeta = embedding.params.zeta;
  const PolarPoint target = embedding.point(dst);
  // arccosh is monotone, so its argument ranks neighbors directly
  auto closeness = [&](NodeId v) {
    if (v == dst) return 0.0;
    const PolarPoint p = embedding.point(v);
    return cosh_distance_argument(p.r, target.r, angular_separation(p.theta, target.theta), zeta);
  };

  RouteResult r;
  r.path.push_back(src);
  NodeId prev = src;
  NodeId cur = src;
  while (true) {
    if (r.hops() >= max_hops) {
      r.outcome = RouteOutcome::kHopLimit;
      return r;
    }
    const auto nb = net.neighbors(cur);
    if (nb.empty()) {
      r.outcome = RouteOutcome::kLocalMinimum;
      return r;
    }
    NodeId best = nb.front();
    double best_u = closeness(best);
    for (std::size_t k = 1; k < nb.size(); ++k) {
      const double u = closeness(nb[k]);
      if (u < best_u || (u == best_u && embedding.rank[nb[k]] < embedding.rank[best])) {
        best = nb[k];
        best_u = u;
      }
    }
    if (best == prev) {
      r.outcome = RouteOutcome::kLocalMinimum;
      return r;
    }
    r.path.push_back(best);
    if (best == dst) {
      r.outcome = RouteOutcome::kDelivered;
      return r;
    }
    prev = cur;
    cur = best;
  }
}

RoutingStats evaluate_routing(const AdjacencySnapshot& net, const Embedding& embedding, const PairPolicy& policy,
                              int threads, bool keep_traces) {
  RoutingStats s;
  s.seed = policy.seed;
  const auto giant = giant_component(net);
  s.giant_size = giant.size();
  const std::uint64_t g = giant.size();
  if (g < 2) return s;
  const std::uint64_t ordered = g * (g - 1);

  std::vector<std::pair<NodeId, NodeId>> pairs;
  if (policy.all_pairs || policy.samples >= ordered) {
    pairs.reserve(ordered);
    for (NodeId a : giant) {
      for (NodeId b : giant) {
        if (a != b) pairs.emplace_back(a, b);
      }
    }
  } else {
    RandomStream rng(policy.seed, StreamPurpose::kRoutingPairs, 0);
    pairs.reserve(policy.samples);
    while (pairs.size() < policy.samples) {
      const NodeId a = giant[rng.below(g)];
      const NodeId b = giant[rng.below(g)];
      if (a != b) pairs.emplace_back(a, b);
    }
  }

  std::vector<PairRoute> results(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t lo, std::size_t hi) {
    // all-pairs runs are grouped by source, so one BFS serves a whole row
    std::vector<std::int32_t> dist;
    NodeId dist_src = 0;
    for (std::size_t k = lo; k < hi; ++k) {
      auto& out = results[k];
      out.src = pairs[k].first;
      out.dst = pairs[k].second;
      out.route = greedy_route(out.src, out.dst, net, embedding);
      if (!out.route.success()) continue;
      if (dist.empty() || dist_src != out.src) {
        dist = bfs_distances(net, out.src);
        dist_src = out.src;
      }
      out.shortest = dist[out.dst];
    }
  });

  double hops = 0.0;
  double stretch = 0.0;
  for (const auto& r : results) {
    switch (r.route.outcome) {
      case RouteOutcome::kDelivered:
        ++s.delivered;
        hops += static_cast<double>(r.route.hops());
        stretch += static_cast<double>(r.route.hops()) / static_cast<double>(r.shortest);
        break;
      case RouteOutcome::kLocalMinimum:
        ++s.local_minimum_drops;
        break;
      case RouteOutcome::kHopLimit:
        ++s.hop_limit_drops;
        break;
    }
  }
  s.n_pairs = results.size();
  s.p_s = static_cast<double>(s.delivered) / static_cast<double>(s.n_pairs);
  if (s.delivered > 0) {
    s.h_bar = hops / static_cast<double>(s.delivered);
    s.stretch = stretch / static_cast<double>(s.delivered);
  }
  if (keep_traces) s.traces = std::move(results);
  return s;
}

}  // namespace hypermap
