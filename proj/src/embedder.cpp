#include "hypermap/embedder.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "hypermap/geometry.hpp"
#include "hypermap/model.hpp"
#include "hypermap/powerlaw.hpp"
#include "hypermap/rng.hpp"

namespace hypermap {
namespace {

// Early nodes for which the likelihood landscape width is recorded.
constexpr std::int64_t kLandscapeRanks = 30;

struct LabelKey {
  bool numeric;
  std::int64_t number;
};

LabelKey label_key(const std::string& s) {
  std::int64_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec == std::errc() && ptr == end && !s.empty()) return {true, value};
  return {false, 0};
}

// Pair term for two nodes whose younger member was born at time y.
struct PairTerm {
  double base;
  double scale;
};

PairTerm pair_term(double r_young, double r_old_at_birth, double zeta) {
  return {std::cosh(zeta * (r_young - r_old_at_birth)),
          2.0 * std::sinh(zeta * r_young) * std::sinh(zeta * r_old_at_birth)};
}

std::string search_name(GridSearch s) { return s == GridSearch::kExhaustive ? "exhaustive" : "branch-and-bound"; }

}  // namespace

std::vector<NodeId> infer_birth_order(const AdjacencySnapshot& net) {
  const std::size_t n = net.node_count();
  std::vector<LabelKey> keys(n);
  for (std::size_t v = 0; v < n; ++v) keys[v] = label_key(net.label(static_cast<NodeId>(v)));
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (net.degree(a) != net.degree(b)) return net.degree(a) > net.degree(b);
    const auto& ka = keys[a];
    const auto& kb = keys[b];
    if (ka.numeric && kb.numeric && ka.number != kb.number) return ka.number < kb.number;
    if (ka.numeric != kb.numeric) return ka.numeric;
    if (net.label(a) != net.label(b)) return net.label(a) < net.label(b);
    return a < b;
  });
  return order;
}

double stationary_expected_degree(std::int64_t k, const ModelParams& params) {
  return static_cast<double>(k) - params.T / params.beta();
}

EmbeddingState::EmbeddingState(const AdjacencySnapshot& net, const ModelParams& params) : params_(params) {
  const auto n = static_cast<std::int64_t>(net.node_count());
  if (n < 1) throw ParameterError("cannot embed an empty network");
  params_.t = n;
  params_.validate();
  order_ = infer_birth_order(net);
  rank_.assign(static_cast<std::size_t>(n), 0);
  for (std::int64_t k = 0; k < n; ++k) rank_[order_[static_cast<std::size_t>(k)]] = k + 1;
  theta_.assign(static_cast<std::size_t>(n + 1), 0.0);
  r_.assign(static_cast<std::size_t>(n + 1), 0.0);
  R_.assign(static_cast<std::size_t>(n + 1), 0.0);
  for (std::int64_t i = 1; i <= n; ++i) {
    const double id = static_cast<double>(i);
    r_[static_cast<std::size_t>(i)] = radial_coordinate(id, params_.zeta);
    if (i >= 2) R_[static_cast<std::size_t>(i)] = connection_radius(id, params_, expected_initial_links(id, params_));
  }
}

AngularObjective local_objective(std::int64_t rank, const EmbeddingState& state, const AdjacencySnapshot& net) {
  if (rank < 2 || rank > state.size()) throw ParameterError("local likelihood needs 2 <= rank <= t");
  const auto& p = state.params();
  const double beta = p.beta();
  const double zeta = p.zeta;
  const double r_i = state.initial_radius(rank);
  const double offset = zeta * state.radius_threshold(rank);

  std::vector<char> linked(static_cast<std::size_t>(rank), 0);
  for (NodeId w : net.neighbors(state.node(rank))) {
    const std::int64_t k = state.rank(w);
    if (k < rank) linked[static_cast<std::size_t>(k)] = 1;
  }
  AngularObjective f(p.T);
  f.reserve(static_cast<std::size_t>(rank - 1));
  for (std::int64_t j = 1; j < rank; ++j) {
    const double r_j = drifted_radius(state.initial_radius(j), r_i, beta);
    const auto term = pair_term(r_i, r_j, zeta);
    f.add(state.theta(j), term.base, term.scale, offset, linked[static_cast<std::size_t>(j)] != 0);
  }
  return f;
}

double local_log_likelihood(std::int64_t rank, double theta, const EmbeddingState& state,
                            const AdjacencySnapshot& net) {
  return local_objective(rank, state, net).value(normalize_angle(theta));
}

std::int64_t grid_size(std::int64_t i, double fixed_spacing) {
  if (i < 1) throw ParameterError("grid time must be >= 1");
  if (fixed_spacing < 0.0) throw ParameterError("angular spacing must be positive");
  const double spacing = fixed_spacing > 0.0 ? fixed_spacing : 1.0 / static_cast<double>(i);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(kTwoPi / spacing)));
}

GridMaximum maximize_angle(std::int64_t rank, const EmbeddingState& state, const AdjacencySnapshot& net,
                           const EmbedOptions& options) {
  const auto f = local_objective(rank, state, net);
  return maximize_on_grid(f, grid_size(rank, options.fixed_spacing), options.search, options.threads);
}

AngularObjective correction_objective(std::int64_t j, std::int64_t current_rank, const EmbeddingState& state,
                                      const AdjacencySnapshot& net) {
  if (j < 1 || j > current_rank || current_rank > state.size()) throw ParameterError("correction rank out of range");
  const auto& p = state.params();
  const double beta = p.beta();
  const double zeta = p.zeta;

  std::vector<char> linked(static_cast<std::size_t>(current_rank + 1), 0);
  for (NodeId w : net.neighbors(state.node(j))) {
    const std::int64_t k = state.rank(w);
    if (k <= current_rank) linked[static_cast<std::size_t>(k)] = 1;
  }
  AngularObjective f(p.T);
  f.reserve(static_cast<std::size_t>(current_rank));
  for (std::int64_t l = 1; l <= current_rank; ++l) {
    if (l == j) continue;
    const std::int64_t young = std::max(j, l);
    const std::int64_t old = std::min(j, l);
    const double r_y = state.initial_radius(young);
    const double r_o = drifted_radius(state.initial_radius(old), r_y, beta);
    const auto term = pair_term(r_y, r_o, zeta);
    f.add(state.theta(l), term.base, term.scale, zeta * state.radius_threshold(young),
          linked[static_cast<std::size_t>(l)] != 0);
  }
  return f;
}

std::int64_t correction_step(EmbeddingState& state, const AdjacencySnapshot& net, std::int64_t current_rank,
                             int passes, const EmbedOptions& options) {
  if (current_rank < 2) return 0;
  const std::int64_t n = grid_size(current_rank, options.fixed_spacing);
  std::int64_t moved = 0;
  for (int pass = 0; pass < passes; ++pass) {
    for (std::int64_t j = 1; j <= current_rank; ++j) {
      const auto f = correction_objective(j, current_rank, state, net);
      const double current = f.value(state.theta(j));
      const auto best = maximize_on_grid(f, n, options.search, options.threads);
      if (best.value > current) {
        state.set_theta(j, best.theta);
        ++moved;
      }
    }
  }
  return moved;
}

std::vector<std::int64_t> correction_times(const AdjacencySnapshot& net, const std::vector<int>& degrees) {
  std::vector<std::size_t> sorted_degrees(net.node_count());
  for (std::size_t v = 0; v < net.node_count(); ++v) sorted_degrees[v] = net.degree(static_cast<NodeId>(v));
  std::sort(sorted_degrees.begin(), sorted_degrees.end(), std::greater<>());
  std::vector<std::int64_t> times;
  for (int d : degrees) {
    // the last rank whose degree is >= d
    const auto it = std::partition_point(sorted_degrees.begin(), sorted_degrees.end(),
                                         [d](std::size_t k) { return static_cast<std::int64_t>(k) >= d; });
    const auto count = static_cast<std::int64_t>(it - sorted_degrees.begin());
    if (count >= 2) times.push_back(count);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

namespace {

double landscape_width(const AngularObjective& f, std::int64_t n) {
  std::vector<double> values(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) values[static_cast<std::size_t>(k)] = f.value(grid_angle(k, n));
  const double best = *std::max_element(values.begin(), values.end());
  const auto near = std::count_if(values.begin(), values.end(), [best](double v) { return v >= best - 1.0; });
  return static_cast<double>(near) / static_cast<double>(n);
}

Embedding finish(const ModelParams& params, const std::vector<NodeId>& order,
                 const std::vector<double>& angles_by_node) {
  Embedding e;
  e.params = params;
  e.order = order;
  const std::size_t n = order.size();
  e.rank.assign(n, 0);
  e.radii.assign(n, 0.0);
  e.angles.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const NodeId v = order[k];
    const auto rank = static_cast<std::int64_t>(k + 1);
    e.rank[v] = rank;
    e.radii[v] = final_radius_for_rank(rank, params);
    e.angles[v] = normalize_angle(angles_by_node[v]);
  }
  return e;
}

bool is_connected(const AdjacencySnapshot& net) {
  const auto comp = connected_components(net);
  return std::all_of(comp.begin(), comp.end(), [](std::uint32_t c) { return c == 0; });
}

}  // namespace

Embedding embed(const AdjacencySnapshot& net, const ModelParams& params, const EmbedOptions& options) {
  EmbeddingState state(net, params);
  const std::int64_t n = state.size();
  const double theta1 = options.random_theta1_seed
                            ? kTwoPi * keyed_uniform(*options.random_theta1_seed, StreamPurpose::kNodeAngle, 0, 1)
                            : normalize_angle(options.theta1);
  state.set_theta(1, theta1);
  state.set_placed(1);

  EmbeddingProvenance prov;
  prov.correction_degrees = options.correction_degrees;
  prov.correction_passes = options.correction_passes;
  prov.search = search_name(options.search);
  prov.theta1 = theta1;
  if (options.fixed_spacing > 0.0) prov.grid_policy = "fixed spacing " + std::to_string(options.fixed_spacing);
  if (options.correction_passes > 0) prov.correction_times = correction_times(net, options.correction_degrees);

  std::size_t next_correction = 0;
  for (std::int64_t i = 2; i <= n; ++i) {
    const auto f = local_objective(i, state, net);
    const std::int64_t points = grid_size(i, options.fixed_spacing);
    const auto best = maximize_on_grid(f, points, options.search, options.threads);
    if (i <= kLandscapeRanks) prov.early_landscape_width.push_back(landscape_width(f, points));
    state.set_theta(i, best.theta);
    state.set_placed(i);
    while (next_correction < prov.correction_times.size() && prov.correction_times[next_correction] < i) {
      ++next_correction;
    }
    if (next_correction < prov.correction_times.size() && prov.correction_times[next_correction] == i) {
      correction_step(state, net, i, options.correction_passes, options);
      ++next_correction;
    }
  }

  std::vector<double> angles(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) angles[state.node(k)] = state.theta(k);
  Embedding e = finish(state.params(), state.order(), angles);
  if (!is_connected(net)) {
    prov.warnings.push_back("network is disconnected; evaluation should use the giant component");
  }
  e.provenance = std::move(prov);
  return e;
}

Embedding embedding_from_angles(const AdjacencySnapshot& net, const ModelParams& params,
                                const std::vector<NodeId>& order, const std::vector<double>& angles) {
  const std::size_t n = net.node_count();
  if (order.size() != n || angles.size() != n) throw ParameterError("order and angles must cover every node");
  std::vector<char> seen(n, 0);
  for (NodeId v : order) {
    if (v >= n || seen[v]) throw ParameterError("order is not a permutation");
    seen[v] = 1;
  }
  ModelParams p = params;
  p.t = static_cast<std::int64_t>(n);
  p.validate();
  Embedding e = finish(p, order, angles);
  e.provenance.method = "given";
  return e;
}

ParameterEstimate estimate_parameters(const AdjacencySnapshot& net, const ModelParams& base, bool estimate_m,
                                      bool estimate_L, bool estimate_gamma) {
  ParameterEstimate out{base, {}};
  out.params.t = static_cast<std::int64_t>(net.node_count());
  if (estimate_m) {
    std::size_t kmin = 0;
    for (std::size_t v = 0; v < net.node_count(); ++v) {
      const std::size_t k = net.degree(static_cast<NodeId>(v));
      if (k > 0 && (kmin == 0 || k < kmin)) kmin = k;
    }
    if (kmin == 0) throw ParameterError("cannot estimate m from a network without links");
    out.params.m = static_cast<double>(kmin);
  }
  if (estimate_L) out.params.L = std::max(0.0, (net.average_degree() - 2.0 * out.params.m) / 2.0);
  if (estimate_gamma) {
    std::vector<std::int64_t> degrees(net.node_count());
    for (std::size_t v = 0; v < net.node_count(); ++v) {
      degrees[v] = static_cast<std::int64_t>(net.degree(static_cast<NodeId>(v)));
    }
    const auto fit = fit_power_law_tail(degrees, std::min<std::size_t>(50, std::max<std::size_t>(2, degrees.size() / 10)));
    out.params.gamma = std::max(2.0, fit.gamma);
    out.gamma_fit = fit.describe();
    if (fit.gamma < 2.0) out.gamma_fit += " (clamped to 2)";
  }
  out.params.validate();
  return out;
}

}  // namespace hypermap
