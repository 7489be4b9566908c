#include "hypermap/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "hypermap/embedder.hpp"
#include "hypermap/geometry.hpp"
#include "hypermap/model.hpp"
#include "hypermap/parallel.hpp"
#include "hypermap/rng.hpp"

namespace hypermap {
namespace {

void check_cover(std::size_t coords, const AdjacencySnapshot& net) {
  if (coords != net.node_count()) throw ParameterError("embedding does not cover the network");
}

double clamp_log(double p) { return std::max(std::log(p), kLogProbabilityFloor); }

// Row sums are formed by one worker each and added in row order, so the
// total does not depend on the worker count.
template <typename RowFn>
double ordered_row_sum(std::size_t rows, int threads, RowFn&& row) {
  std::vector<double> partial(rows, 0.0);
  parallel_for(rows, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) partial[i] = row(i);
  });
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

}  // namespace

std::uint64_t ConnectionProbabilityCurve::total_pairs() const {
  std::uint64_t s = 0;
  for (auto c : pair_counts) s += c;
  return s;
}

double ConnectionProbabilityCurve::max_deviation(std::uint64_t min_pairs, GlobalProbability form) const {
  const auto& theory = form == GlobalProbability::kExactSum ? theoretical : theoretical_first_term;
  double worst = 0.0;
  for (std::size_t b = 0; b < bins(); ++b) {
    if (pair_counts[b] >= min_pairs && pair_counts[b] > 0) {
      worst = std::max(worst, std::fabs(empirical[b] - theory[b]));
    }
  }
  return worst;
}

ConnectionProbabilityCurve connection_curve(const Embedding& embedding, const AdjacencySnapshot& net,
                                            const LikelihoodContext& ctx, double bin_width, int threads) {
  check_cover(embedding.node_count(), net);
  if (!(bin_width > 0.0)) throw ParameterError("bin width must be positive");
  const std::size_t n = net.node_count();
  std::vector<std::uint64_t> pairs;
  std::vector<std::uint64_t> linked;
  std::mutex merge;

  parallel_for(n, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::uint64_t> lp;
    std::vector<std::uint64_t> ll;
    std::vector<char> adj(n, 0);
    for (std::size_t i = lo; i < hi; ++i) {
      const auto vi = static_cast<NodeId>(i);
      for (NodeId w : net.neighbors(vi)) adj[w] = 1;
      for (std::size_t j = i + 1; j < n; ++j) {
        const double x = embedding.distance(vi, static_cast<NodeId>(j));
        const auto b = static_cast<std::size_t>(x / bin_width);
        if (b >= lp.size()) {
          lp.resize(b + 1, 0);
          ll.resize(b + 1, 0);
        }
        ++lp[b];
        if (adj[j]) ++ll[b];
      }
      for (NodeId w : net.neighbors(vi)) adj[w] = 0;
    }
    std::lock_guard lock(merge);
    if (lp.size() > pairs.size()) {
      pairs.resize(lp.size(), 0);
      linked.resize(lp.size(), 0);
    }
    for (std::size_t b = 0; b < lp.size(); ++b) {
      pairs[b] += lp[b];
      linked[b] += ll[b];
    }
  });

  ConnectionProbabilityCurve c;
  c.bin_width = bin_width;
  c.pair_counts = std::move(pairs);
  c.linked_counts = std::move(linked);
  const std::size_t bins = c.pair_counts.size();
  c.bin_edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) c.bin_edges[b] = bin_width * static_cast<double>(b);
  c.empirical.assign(bins, 0.0);
  c.theoretical.assign(bins, 0.0);
  c.theoretical_first_term.assign(bins, 0.0);
  for (std::size_t b = 0; b < bins; ++b) {
    if (c.pair_counts[b] > 0) {
      c.empirical[b] = static_cast<double>(c.linked_counts[b]) / static_cast<double>(c.pair_counts[b]);
    }
    c.theoretical[b] = ctx.global_connection_probability(c.center(b), GlobalProbability::kExactSum);
    c.theoretical_first_term[b] = ctx.global_connection_probability(c.center(b), GlobalProbability::kFirstTerm);
  }
  return c;
}

double curve_distance(const ConnectionProbabilityCurve& a, const ConnectionProbabilityCurve& b,
                      std::uint64_t min_pairs) {
  if (a.bin_width != b.bin_width) throw ParameterError("curves use different bin widths");
  const std::size_t bins = std::min(a.bins(), b.bins());
  double worst = 0.0;
  for (std::size_t k = 0; k < bins; ++k) {
    if (a.pair_counts[k] >= min_pairs && b.pair_counts[k] >= min_pairs && a.pair_counts[k] > 0 &&
        b.pair_counts[k] > 0) {
      worst = std::max(worst, std::fabs(a.empirical[k] - b.empirical[k]));
    }
  }
  return worst;
}

double global_log_likelihood(std::span<const double> radii, std::span<const double> angles,
                             const AdjacencySnapshot& net, const LikelihoodContext& ctx, GlobalProbability form,
                             int threads) {
  const std::size_t n = net.node_count();
  check_cover(radii.size(), net);
  check_cover(angles.size(), net);
  const auto& p = ctx.params();
  const double R_t = ctx.connection_radius_final();

  return ordered_row_sum(n, threads, [&](std::size_t i) {
    const auto nb = net.neighbors(static_cast<NodeId>(i));
    auto next = std::upper_bound(nb.begin(), nb.end(), static_cast<NodeId>(i));
    const PolarPoint a{radii[i], angles[i]};
    double acc = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool linked = next != nb.end() && *next == j;
      if (linked) ++next;
      const double x = hyperbolic_distance(a, {radii[j], angles[j]}, p.zeta);
      if (form == GlobalProbability::kFirstTerm) {
        const auto lp = log_connection_probability(x, R_t, p.T, p.zeta);
        acc += linked ? lp.log_p : lp.log_q;
      } else {
        const double q = ctx.global_connection_probability(x, form);
        acc += linked ? clamp_log(q) : clamp_log(1.0 - q);
      }
    }
    return acc;
  });
}

double global_log_likelihood(const Embedding& embedding, const AdjacencySnapshot& net, const LikelihoodContext& ctx,
                             GlobalProbability form, int threads) {
  return global_log_likelihood(embedding.radii, embedding.angles, net, ctx, form, threads);
}

LogLossReport logloss_report(const Embedding& embedding, const AdjacencySnapshot& net, const LikelihoodContext& ctx,
                             const std::vector<std::vector<double>>& angle_draws, int threads,
                             GlobalProbability form) {
  if (angle_draws.empty()) throw ParameterError("log-loss needs at least one random draw");
  LogLossReport r;
  r.n_rand = static_cast<int>(angle_draws.size());
  r.ll_inf = -global_log_likelihood(embedding, net, ctx, form, threads);
  double sum = 0.0;
  for (const auto& draw : angle_draws) {
    const double ll = -global_log_likelihood(embedding.radii, draw, net, ctx, form, threads);
    r.ll_rand_draws.push_back(ll);
    sum += ll;
  }
  r.ll_rand = sum / static_cast<double>(angle_draws.size());
  r.r_ll_exponent = r.ll_rand - r.ll_inf;
  return r;
}

LogLossReport logloss_report(const Embedding& embedding, const AdjacencySnapshot& net, const LikelihoodContext& ctx,
                             int n_rand, std::uint64_t seed, int threads, GlobalProbability form) {
  if (n_rand < 1) throw ParameterError("n_rand must be >= 1");
  std::vector<std::vector<double>> draws(static_cast<std::size_t>(n_rand));
  for (std::size_t d = 0; d < draws.size(); ++d) {
    RandomStream rng(seed, StreamPurpose::kRandomAngles, d);
    draws[d].resize(embedding.node_count());
    for (double& a : draws[d]) a = kTwoPi * rng.uniform();
  }
  auto r = logloss_report(embedding, net, ctx, draws, threads, form);
  r.seed = seed;
  return r;
}

namespace {

std::vector<DegreeAverage> by_degree(const AdjacencySnapshot& net, const std::vector<double>& values,
                                     const std::vector<char>& include) {
  std::map<std::int64_t, std::pair<std::size_t, double>> acc;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (!include[v]) continue;
    auto& slot = acc[static_cast<std::int64_t>(net.degree(static_cast<NodeId>(v)))];
    ++slot.first;
    slot.second += values[v];
  }
  std::vector<DegreeAverage> out;
  for (const auto& [k, s] : acc) out.push_back({k, s.first, s.second / static_cast<double>(s.first)});
  return out;
}

// Brandes accumulation restricted to `members`; sources handled in fixed
// blocks whose partial sums are merged in block order.
void shortest_path_statistics(const AdjacencySnapshot& net, const std::vector<NodeId>& members, int threads,
                              std::vector<double>& betweenness, std::vector<std::uint64_t>& hop_counts) {
  const std::size_t n = net.node_count();
  const std::size_t g = members.size();
  constexpr std::size_t kBlocks = 256;
  const std::size_t block = std::max<std::size_t>(1, (g + kBlocks - 1) / kBlocks);
  const std::size_t nblocks = (g + block - 1) / block;
  std::vector<std::vector<double>> partial(nblocks);
  std::vector<std::vector<std::uint64_t>> hops(nblocks);

  parallel_for(nblocks, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::int32_t> dist(n, -1);
    std::vector<double> sigma(n, 0.0);
    std::vector<double> delta(n, 0.0);
    std::vector<NodeId> stack;
    stack.reserve(g);
    for (std::size_t b = lo; b < hi; ++b) {
      auto& acc = partial[b];
      auto& hc = hops[b];
      acc.assign(n, 0.0);
      for (std::size_t s_idx = b * block; s_idx < std::min(g, (b + 1) * block); ++s_idx) {
        const NodeId s = members[s_idx];
        stack.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        std::size_t head = 0;
        stack.push_back(s);
        while (head < stack.size()) {
          const NodeId v = stack[head++];
          for (NodeId w : net.neighbors(v)) {
            if (dist[w] < 0) {
              dist[w] = dist[v] + 1;
              stack.push_back(w);
            }
            if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
          }
        }
        for (std::size_t k = 1; k < stack.size(); ++k) {
          const auto l = static_cast<std::size_t>(dist[stack[k]]);
          if (l >= hc.size()) hc.resize(l + 1, 0);
          ++hc[l];
        }
        for (std::size_t k = stack.size(); k-- > 0;) {
          const NodeId w = stack[k];
          for (NodeId v : net.neighbors(w)) {
            if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
          }
          if (w != s) acc[w] += delta[w];
        }
        for (NodeId v : stack) {
          dist[v] = -1;
          sigma[v] = 0.0;
          delta[v] = 0.0;
        }
      }
    }
  });

  betweenness.assign(n, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) betweenness[v] += acc[v];
  }
  hop_counts.clear();
  for (const auto& hc : hops) {
    if (hc.size() > hop_counts.size()) hop_counts.resize(hc.size(), 0);
    for (std::size_t l = 0; l < hc.size(); ++l) hop_counts[l] += hc[l];
  }
}

}  // namespace

TopologyStats topology_stats(const AdjacencySnapshot& net, int threads) {
  TopologyStats s;
  const std::size_t n = net.node_count();
  s.node_count = n;
  s.average_degree = net.average_degree();
  std::vector<char> everyone(n, 1);

  std::map<std::int64_t, std::size_t> hist;
  for (std::size_t v = 0; v < n; ++v) ++hist[static_cast<std::int64_t>(net.degree(static_cast<NodeId>(v)))];
  for (const auto& [k, c] : hist) s.degree_distribution.push_back({k, c, static_cast<double>(c) / static_cast<double>(n)});

  s.node_clustering.assign(n, 0.0);
  parallel_for(n, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<char> mark(n, 0);
    for (std::size_t v = lo; v < hi; ++v) {
      const auto nb = net.neighbors(static_cast<NodeId>(v));
      if (nb.size() < 2) continue;
      for (NodeId w : nb) mark[w] = 1;
      std::uint64_t closed = 0;
      for (NodeId w : nb) {
        for (NodeId u : net.neighbors(w)) closed += mark[u];
      }
      for (NodeId w : nb) mark[w] = 0;
      const double k = static_cast<double>(nb.size());
      s.node_clustering[v] = static_cast<double>(closed) / (k * (k - 1.0));
    }
  });
  double csum = 0.0;
  for (double c : s.node_clustering) csum += c;
  s.average_clustering = n > 0 ? csum / static_cast<double>(n) : 0.0;
  s.clustering = by_degree(net, s.node_clustering, everyone);

  std::vector<double> knn(n, 0.0);
  std::vector<char> has_neighbors(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto nb = net.neighbors(static_cast<NodeId>(v));
    if (nb.empty()) continue;
    double sum = 0.0;
    for (NodeId w : nb) sum += static_cast<double>(net.degree(w));
    knn[v] = sum / static_cast<double>(nb.size());
    has_neighbors[v] = 1;
  }
  s.neighbor_degree = by_degree(net, knn, has_neighbors);

  const auto giant = giant_component(net);
  s.giant_size = giant.size();
  std::vector<double> raw;
  std::vector<std::uint64_t> hops;
  shortest_path_statistics(net, giant, threads, raw, hops);
  const double g = static_cast<double>(giant.size());
  const double pairs = (g - 1.0) * (g - 2.0) / 2.0;
  s.node_betweenness.assign(n, 0.0);
  std::vector<char> in_giant(n, 0);
  for (NodeId v : giant) {
    in_giant[v] = 1;
    // each unordered pair was counted from both endpoints
    s.node_betweenness[v] = pairs > 0.0 ? raw[v] / 2.0 / pairs : 0.0;
  }
  s.betweenness = by_degree(net, s.node_betweenness, in_giant);

  std::uint64_t total = 0;
  for (auto c : hops) total += c;
  s.distance_distribution.assign(hops.size(), 0.0);
  for (std::size_t l = 0; l < hops.size(); ++l) {
    s.distance_distribution[l] = total > 0 ? static_cast<double>(hops[l]) / static_cast<double>(total) : 0.0;
  }

  const auto order = infer_birth_order(net);
  std::vector<std::int64_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = static_cast<std::int64_t>(k + 1);
  s.links_to_older.assign(n + 1, 0);
  s.m_tilde.assign(n + 1, 0.0);
  double running = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::int64_t>(k + 1);
    std::int64_t older = 0;
    for (NodeId w : net.neighbors(order[k])) older += rank[w] < i ? 1 : 0;
    s.links_to_older[static_cast<std::size_t>(i)] = older;
    if (i >= 2) {
      running += static_cast<double>(older);
      s.m_tilde[static_cast<std::size_t>(i)] = running / static_cast<double>(i - 1);
    }
  }
  return s;
}

double radial_ks_statistic(std::span<const double> radii, const ModelParams& params) {
  if (radii.empty()) throw ParameterError("no radii");
  std::vector<double> r(radii.begin(), radii.end());
  std::sort(r.begin(), r.end());
  const double r_t = radial_coordinate(static_cast<double>(params.t), params.zeta);
  const double c = params.zeta / (2.0 * params.beta());
  const double n = static_cast<double>(r.size());
  double ks = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    const double model = std::min(1.0, std::exp(c * (r[k] - r_t)));
    ks = std::max({ks, std::fabs(static_cast<double>(k + 1) / n - model), std::fabs(model - static_cast<double>(k) / n)});
  }
  return ks;
}

}  // namespace hypermap
