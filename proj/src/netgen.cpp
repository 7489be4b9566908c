#include "hypermap/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "hypermap/geometry.hpp"
#include "hypermap/model.hpp"
#include "hypermap/parallel.hpp"
#include "hypermap/rng.hpp"

namespace hypermap {
namespace {

// Loop guard for one internal-link step; far above the expected need.
constexpr std::int64_t kInternalAttemptCap = 10'000'000;

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kPSO:
      return "pso";
    case ModelKind::kGeneralizedPSO:
      return "gpso";
    case ModelKind::kEPSO:
      return "epso";
  }
  return "unknown";
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "pso") return ModelKind::kPSO;
  if (name == "gpso" || name == "generalized-pso") return ModelKind::kGeneralizedPSO;
  if (name == "epso" || name == "e-pso") return ModelKind::kEPSO;
  throw ParameterError("unknown model kind: " + name);
}

AdjacencySnapshot GrownNetwork::snapshot() const {
  return AdjacencySnapshot(labels, edges);
}

double GrownNetwork::final_radius(NodeId v) const {
  const double r_t = radial_coordinate(static_cast<double>(params.t), params.zeta);
  return drifted_radius(truth[v].r_initial, r_t, params.beta());
}

Embedding truth_embedding(const GrownNetwork& net) {
  Embedding e;
  e.params = net.params;
  const std::size_t n = net.truth.size();
  e.order.resize(n);
  e.rank.resize(n);
  e.radii.resize(n);
  e.angles.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    e.order[v] = static_cast<NodeId>(v);
    e.rank[v] = net.truth[v].birth;
    e.radii[v] = net.final_radius(static_cast<NodeId>(v));
    e.angles[v] = net.truth[v].theta;
  }
  e.provenance.method = "ground-truth";
  e.provenance.params_source = to_string(net.kind) + " generator, seed " + std::to_string(net.seed);
  return e;
}

GrownNetwork grow(const ModelParams& params, ModelKind kind, std::uint64_t seed, int threads) {
  params.validate();
  if (kind == ModelKind::kGeneralizedPSO && params.L != std::floor(params.L)) {
    throw ParameterError("generalized PSO requires an integer L");
  }
  GrownNetwork net;
  net.params = params;
  net.kind = kind;
  net.seed = seed;

  const std::int64_t t = params.t;
  const double beta = params.beta();
  const double zeta = params.zeta;
  net.truth.resize(static_cast<std::size_t>(t));
  for (std::int64_t i = 1; i <= t; ++i) {
    auto& node = net.truth[static_cast<std::size_t>(i - 1)];
    node.birth = i;
    node.r_initial = radial_coordinate(static_cast<double>(i), zeta);
    node.theta = kTwoPi * keyed_uniform(seed, StreamPurpose::kNodeAngle, static_cast<std::uint64_t>(i), 0);
  }
  std::vector<std::int64_t> ids(static_cast<std::size_t>(t));
  for (std::int64_t i = 0; i < t; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
  RandomStream shuffle(seed, StreamPurpose::kNodeLabels, 0);
  for (std::size_t i = ids.size(); i > 1; --i) std::swap(ids[i - 1], ids[shuffle.below(i)]);
  net.labels.reserve(ids.size());
  for (auto id : ids) net.labels.push_back(std::to_string(id));
  if (t < 2) return net;

  std::unordered_set<std::uint64_t> present;
  std::vector<char> linked(static_cast<std::size_t>(t), 0);
  std::size_t internal_target = kind == ModelKind::kGeneralizedPSO ? static_cast<std::size_t>(params.L) : 0;

  for (std::int64_t i = 2; i <= t; ++i) {
    const double id = static_cast<double>(i);
    const double r_i = radial_coordinate(id, zeta);
    const double theta_i = net.truth[static_cast<std::size_t>(i - 1)].theta;
    const double mbar = kind == ModelKind::kEPSO ? expected_initial_links(id, params) : params.m;
    const double R_i = connection_radius(id, params, mbar);

    // Edge (i, j) is decided by its own keyed draw, so chunking is free.
    const auto old_count = static_cast<std::size_t>(i - 1);
    parallel_for(old_count, threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t v = lo; v < hi; ++v) {
        const auto& old = net.truth[v];
        const double r_j = drifted_radius(old.r_initial, r_i, beta);
        const double x = hyperbolic_distance({r_i, theta_i}, {r_j, old.theta}, zeta);
        const double p = connection_probability(x, R_i, params.T, zeta);
        const double u = keyed_uniform(seed, StreamPurpose::kEdgeDraw, static_cast<std::uint64_t>(i), v + 1);
        linked[v] = u < p ? 1 : 0;
      }
    });
    const auto new_id = static_cast<NodeId>(i - 1);
    const std::size_t old_edges = net.edges.size();
    for (std::size_t v = 0; v < old_count; ++v) {
      if (linked[v]) {
        net.edges.emplace_back(static_cast<NodeId>(v), new_id);
        present.insert(pair_key(static_cast<NodeId>(v), new_id));
      }
    }

    if (internal_target == 0 || old_count < 2) continue;
    const std::size_t old_pairs = old_count * (old_count - 1) / 2;
    // edges among nodes older than i are those present before this step
    if (old_pairs - old_edges < internal_target) continue;
    RandomStream rng(seed, StreamPurpose::kInternalLinks, static_cast<std::uint64_t>(i));
    std::size_t added = 0;
    std::int64_t attempts = 0;
    while (added < internal_target) {
      if (++attempts > kInternalAttemptCap) {
        ++net.internal_link_shortfall;
        break;
      }
      const auto k = static_cast<NodeId>(rng.below(old_count));
      const auto l = static_cast<NodeId>(rng.below(old_count));
      if (k == l || present.contains(pair_key(k, l))) continue;
      const double r_k = drifted_radius(net.truth[k].r_initial, r_i, beta);
      const double r_l = drifted_radius(net.truth[l].r_initial, r_i, beta);
      const double x = hyperbolic_distance({r_k, net.truth[k].theta}, {r_l, net.truth[l].theta}, zeta);
      if (rng.uniform() < connection_probability(x, R_i, params.T, zeta)) {
        net.edges.emplace_back(std::min(k, l), std::max(k, l));
        present.insert(pair_key(k, l));
        ++added;
      }
    }
  }
  std::sort(net.edges.begin(), net.edges.end());
  return net;
}

}  // namespace hypermap
