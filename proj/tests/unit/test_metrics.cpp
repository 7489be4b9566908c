#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <vector>

#include "hypermap/embedder.hpp"
#include "hypermap/metrics.hpp"
#include "hypermap/netgen.hpp"
#include "hypermap/powerlaw.hpp"
#include "hypermap/rng.hpp"
#include "oracles.hpp"

using namespace hypermap;

namespace {

ModelParams epso(std::int64_t t, double T = 0.4, double gamma = 2.1) {
  ModelParams p;
  p.m = 1.5;
  p.L = 2.5;
  p.gamma = gamma;
  p.T = T;
  p.t = t;
  return p;
}

const DegreeAverage* at_degree(const std::vector<DegreeAverage>& v, std::int64_t k) {
  for (const auto& d : v)
    if (d.degree == k) return &d;
  return nullptr;
}

// Unnormalized betweenness by counting geodesics through each node.
std::vector<double> brute_betweenness(const AdjacencySnapshot& g) {
  const auto n = static_cast<NodeId>(g.node_count());
  std::vector<std::vector<std::int32_t>> d(n);
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (NodeId s = 0; s < n; ++s) {
    d[s] = bfs_distances(g, s);
    // path counts by increasing distance
    std::vector<NodeId> by_dist(n);
    std::iota(by_dist.begin(), by_dist.end(), NodeId{0});
    std::sort(by_dist.begin(), by_dist.end(), [&](NodeId a, NodeId b) { return d[s][a] < d[s][b]; });
    sigma[s][s] = 1.0;
    for (NodeId v : by_dist) {
      if (d[s][v] <= 0) continue;
      for (NodeId w : g.neighbors(v))
        if (d[s][w] == d[s][v] - 1) sigma[s][v] += sigma[s][w];
    }
  }
  std::vector<double> b(n, 0.0);
  for (NodeId s = 0; s < n; ++s)
    for (NodeId t = s + 1; t < n; ++t) {
      if (d[s][t] <= 0) continue;
      for (NodeId v = 0; v < n; ++v) {
        if (v == s || v == t || d[s][v] < 0 || d[v][t] < 0) continue;
        if (d[s][v] + d[v][t] == d[s][t]) b[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  return b;
}

double linear_space_log_likelihood(const std::vector<double>& r, const std::vector<double>& theta,
                                   const AdjacencySnapshot& g, const ModelParams& p, GlobalProbability form) {
  double product = 1.0;
  const auto n = static_cast<NodeId>(g.node_count());
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) {
      const double x = oracle::distance(r[a], theta[a], r[b], theta[b], p.zeta);
      const double q = form == GlobalProbability::kFirstTerm ? oracle::first_term(x, p) : oracle::exact_sum(x, p);
      product *= g.has_edge(a, b) ? q : 1.0 - q;
    }
  return std::log(product);
}

}  // namespace

TEST(ConnectionCurve, CompleteAndEmptyGraphs) {
  const auto p = epso(30);
  std::vector<double> angles(30);
  for (std::size_t v = 0; v < 30; ++v) angles[v] = 0.2 * static_cast<double>(v);
  std::vector<NodeId> order(30);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::vector<Edge> all;
  for (NodeId a = 0; a < 30; ++a)
    for (NodeId b = a + 1; b < 30; ++b) all.emplace_back(a, b);
  const auto full = AdjacencySnapshot::from_edges(30, all);
  const auto empty = AdjacencySnapshot::from_edges(30, {});
  const LikelihoodContext ctx(p);
  const auto e = embedding_from_angles(full, p, order, angles);
  const auto c1 = connection_curve(e, full, ctx);
  const auto c0 = connection_curve(e, empty, ctx);
  EXPECT_EQ(c1.total_pairs(), 435u);
  EXPECT_EQ(c0.total_pairs(), 435u);
  for (std::size_t b = 0; b < c1.bins(); ++b) {
    EXPECT_EQ(c1.empirical[b], c1.pair_counts[b] > 0 ? 1.0 : 0.0);
    EXPECT_EQ(c0.empirical[b], 0.0);
    EXPECT_GE(c1.theoretical[b], 0.0);
    EXPECT_LE(c1.theoretical[b], 1.0);
    EXPECT_NEAR(c1.theoretical[b], ctx.global_connection_probability(c1.center(b)), 1e-15);
    EXPECT_EQ(c1.bin_edges[b], static_cast<double>(b));
  }
}

TEST(ConnectionCurve, PairCountsAndRelabelInvariance) {
  const auto p = epso(300);
  const auto net = grow(p, ModelKind::kEPSO, 6);
  const auto g = net.snapshot();
  const auto e = truth_embedding(net);
  const LikelihoodContext ctx(p);
  const auto c = connection_curve(e, g, ctx);
  EXPECT_EQ(c.total_pairs(), 300u * 299u / 2u);
  std::uint64_t linked = 0;
  for (std::size_t b = 0; b < c.bins(); ++b) {
    linked += c.linked_counts[b];
    EXPECT_GE(c.empirical[b], 0.0);
    EXPECT_LE(c.empirical[b], 1.0);
  }
  EXPECT_EQ(linked, g.edge_count());
  EXPECT_EQ(connection_curve(e, g, ctx, 1.0, 4).empirical, c.empirical);

  // reverse every node id
  const auto n = static_cast<NodeId>(g.node_count());
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(n - 1 - b, n - 1 - a);
  const auto h = AdjacencySnapshot::from_edges(n, edges);
  Embedding f = e;
  for (NodeId v = 0; v < n; ++v) {
    f.radii[n - 1 - v] = e.radii[v];
    f.angles[n - 1 - v] = e.angles[v];
  }
  const auto c2 = connection_curve(f, h, ctx);
  EXPECT_EQ(c2.empirical, c.empirical);
  EXPECT_EQ(c2.pair_counts, c.pair_counts);
}

TEST(ConnectionCurve, CurveDistance) {
  ConnectionProbabilityCurve a, b;
  a.pair_counts = {200, 50, 200};
  b.pair_counts = {300, 300, 100};
  a.empirical = {0.9, 0.1, 0.2};
  b.empirical = {0.8, 0.9, 0.5};
  EXPECT_NEAR(curve_distance(a, b, 100), 0.3, 1e-15);
  EXPECT_NEAR(curve_distance(a, b, 150), 0.1, 1e-15);
  EXPECT_EQ(curve_distance(a, b, 1000), 0.0);
}

TEST(GlobalLogLikelihood, ThreeNodeHandCase) {
  // links 1-2 and 1-3, no link 2-3
  const auto g = AdjacencySnapshot::from_edges(3, std::vector<Edge>{{0, 1}, {0, 2}});
  const auto p = epso(3);
  const LikelihoodContext ctx(p);
  const std::vector<double> r{0.3, 1.4, 2.2};
  const std::vector<double> th{0.0, 0.7, 2.9};
  auto pt = [&](int a, int b) { return oracle::first_term(oracle::distance(r[a], th[a], r[b], th[b], 1.0), p); };
  const double expected = std::log(pt(0, 1) * pt(0, 2) * (1.0 - pt(1, 2)));
  EXPECT_NEAR(global_log_likelihood(r, th, g, ctx), expected, 1e-12);
}

TEST(GlobalLogLikelihood, MatchesLinearSpaceOnEverySmallGraph) {
  for (NodeId n = 2; n <= 6; ++n) {
    auto p = epso(n, 0.6);
    const LikelihoodContext ctx(p);
    std::vector<double> r(n), th(n);
    for (NodeId v = 0; v < n; ++v) {
      r[v] = final_radius_for_rank(v + 1, p);
      th[v] = kTwoPi * keyed_uniform(77, StreamPurpose::kNodeAngle, n, v);
    }
    for (const auto& edges : oracle::all_graphs(n)) {
      const auto g = AdjacencySnapshot::from_edges(n, edges);
      for (auto form : {GlobalProbability::kFirstTerm, GlobalProbability::kExactSum}) {
        const double want = linear_space_log_likelihood(r, th, g, p, form);
        ASSERT_NEAR(global_log_likelihood(r, th, g, ctx, form), want, 1e-9 * std::max(1.0, std::fabs(want)))
            << "n=" << n << " edges=" << edges.size();
      }
    }
  }
}

TEST(GlobalLogLikelihood, MoreEmptyPairsLowerTheValue) {
  const auto p3 = epso(3), p6 = epso(6);
  const std::vector<double> th{0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  std::vector<double> r3, r6;
  for (int k = 1; k <= 3; ++k) r3.push_back(final_radius_for_rank(k, p3));
  for (int k = 1; k <= 6; ++k) r6.push_back(final_radius_for_rank(k, p6));
  const double a = global_log_likelihood(r3, std::span(th).first(3), AdjacencySnapshot::from_edges(3, {}),
                                         LikelihoodContext(p3));
  const double b = global_log_likelihood(r6, th, AdjacencySnapshot::from_edges(6, {}), LikelihoodContext(p6));
  EXPECT_LT(a, 0.0);
  EXPECT_LT(b, a);
}

TEST(LogLoss, SelfDrawGivesZeroAndRotationLeavesExponentUnchanged) {
  const auto p = epso(300);
  const auto net = grow(p, ModelKind::kEPSO, 14);
  const auto g = net.snapshot();
  const auto e = embed(g, p);
  const LikelihoodContext ctx(p);
  const auto self = logloss_report(e, g, ctx, std::vector<std::vector<double>>{e.angles});
  EXPECT_NEAR(self.r_ll_exponent, 0.0, 1e-9);

  const auto base = logloss_report(e, g, ctx, 5, 3);
  Embedding rotated = e;
  for (auto& a : rotated.angles) a = normalize_angle(a + 2.1);
  const auto turned = logloss_report(rotated, g, ctx, 5, 3);
  EXPECT_NEAR(turned.ll_inf, base.ll_inf, 1e-9 * base.ll_inf);
  EXPECT_NEAR(turned.r_ll_exponent, base.r_ll_exponent, 1e-6 * base.ll_inf);
  EXPECT_EQ(base.n_rand, 5);
  EXPECT_EQ(base.ll_rand_draws.size(), 5u);
  EXPECT_TRUE(std::isfinite(base.ll_rand));
  EXPECT_GT(base.r_ll_exponent, 0.0);
  EXPECT_EQ(logloss_report(e, g, ctx, 5, 3).ll_rand, base.ll_rand);
  EXPECT_NE(logloss_report(e, g, ctx, 5, 4).ll_rand, base.ll_rand);
}

TEST(LogLoss, InferredLossIsCloseToGroundTruthLoss) {
  const auto p = epso(2000, 0.7, 2.5);
  const auto net = grow(p, ModelKind::kEPSO, 1);
  const auto g = net.snapshot();
  const LikelihoodContext ctx(p);
  const double real = -global_log_likelihood(truth_embedding(net), g, ctx);
  const double inferred = -global_log_likelihood(embed(g, p), g, ctx);
  EXPECT_NEAR(inferred / real, 1.0, 0.10);
}

TEST(TopologyStats, Triangle) {
  const auto s = topology_stats(AdjacencySnapshot::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}));
  ASSERT_NE(at_degree(s.clustering, 2), nullptr);
  EXPECT_EQ(at_degree(s.clustering, 2)->value, 1.0);
  EXPECT_EQ(s.average_clustering, 1.0);
  ASSERT_EQ(s.distance_distribution.size(), 2u);
  EXPECT_EQ(s.distance_distribution[1], 1.0);
  for (double b : s.node_betweenness) EXPECT_EQ(b, 0.0);
}

TEST(TopologyStats, Star) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= 6; ++v) e.emplace_back(0, v);
  const auto s = topology_stats(AdjacencySnapshot::from_edges(7, e));
  EXPECT_DOUBLE_EQ(s.node_betweenness[0], 1.0);
  for (NodeId v = 1; v <= 6; ++v) {
    EXPECT_EQ(s.node_betweenness[v], 0.0);
    EXPECT_EQ(s.node_clustering[v], 0.0);
  }
  EXPECT_DOUBLE_EQ(at_degree(s.neighbor_degree, 1)->value, 6.0);
  EXPECT_DOUBLE_EQ(at_degree(s.neighbor_degree, 6)->value, 1.0);
  EXPECT_DOUBLE_EQ(at_degree(s.degree_distribution, 1)->value, 6.0 / 7.0);
}

TEST(TopologyStats, Path) {
  const auto s = topology_stats(AdjacencySnapshot::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_DOUBLE_EQ(s.node_betweenness[1], 1.0);
  ASSERT_EQ(s.distance_distribution.size(), 3u);
  EXPECT_NEAR(s.distance_distribution[1], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(s.distance_distribution[2], 1.0 / 3.0, 1e-15);
}

TEST(TopologyStats, MTildeIsTheRunningMeanOfOlderLinks) {
  // degrees 3, 2, 2, 1: order 0, 1, 2, 3
  const auto g = AdjacencySnapshot::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  const auto s = topology_stats(g);
  EXPECT_EQ(s.links_to_older, (std::vector<std::int64_t>{0, 0, 1, 2, 1}));
  EXPECT_DOUBLE_EQ(s.m_tilde[2], 1.0);
  EXPECT_DOUBLE_EQ(s.m_tilde[3], 1.5);
  EXPECT_DOUBLE_EQ(s.m_tilde[4], 4.0 / 3.0);
}

TEST(TopologyStats, InvariantsAndBrandesAgainstBruteForce) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto net = grow(epso(150, 0.7), ModelKind::kEPSO, seed);
    // append an isolated pair so the giant component is a strict subset
    auto edges = net.edges;
    edges.emplace_back(150, 151);
    const auto g = AdjacencySnapshot::from_edges(152, edges);
    const auto s = topology_stats(g);
    const auto s4 = topology_stats(g, 4);
    EXPECT_EQ(s.node_betweenness, s4.node_betweenness);

    double mass = 0.0;
    for (const auto& d : s.degree_distribution) {
      mass += d.value;
      EXPECT_NEAR(d.value * 152.0, static_cast<double>(d.count), 1e-9);
    }
    EXPECT_NEAR(mass, 1.0, 1e-12);
    EXPECT_NEAR(std::accumulate(s.distance_distribution.begin(), s.distance_distribution.end(), 0.0), 1.0, 1e-12);
    for (const auto& c : s.clustering) {
      EXPECT_GE(c.value, 0.0);
      EXPECT_LE(c.value, 1.0);
    }

    const auto giant = giant_component(g);
    const auto brute = brute_betweenness(g);
    const double gs = static_cast<double>(giant.size());
    const double pairs = (gs - 1) * (gs - 2) / 2;
    for (NodeId v : giant) {
      EXPECT_NEAR(s.node_betweenness[v], brute[v] / pairs, 1e-12) << v;
      if (g.degree(v) == 1) EXPECT_EQ(s.node_betweenness[v], 0.0);
    }
    EXPECT_EQ(s.node_betweenness[150], 0.0);
  }
}

TEST(RadialKs, GroundTruthRadiiFitTheDensity) {
  const auto p = epso(5000);
  std::vector<double> r;
  for (std::int64_t i = 1; i <= p.t; ++i) r.push_back(final_radius_for_rank(i, p));
  EXPECT_LT(radial_ks_statistic(r, p), 0.03);
  std::vector<double> shifted(r.size(), 2 * std::log(5000.0));
  EXPECT_GT(radial_ks_statistic(shifted, p), 0.5);
  EXPECT_THROW(radial_ks_statistic(std::vector<double>{}, p), ParameterError);
}

TEST(PowerLaw, RecoversExponentOfDiscreteSample) {
  // inverse-CDF sample of a continuous power law, floored
  std::vector<std::int64_t> k;
  RandomStream rng(4, StreamPurpose::kNodeAngle, 0);
  for (int n = 0; n < 20000; ++n) {
    k.push_back(static_cast<std::int64_t>(std::floor(5.0 * std::pow(1.0 - rng.uniform(), -1.0 / 1.5) + 0.5)));
  }
  const auto fit = fit_power_law_tail(k, 50);
  EXPECT_NEAR(fit.gamma, 2.5, 0.1);
  EXPECT_GE(fit.tail_size, 50u);
  EXPECT_FALSE(fit.describe().empty());
  EXPECT_THROW(fit_power_law_tail(std::vector<std::int64_t>{1, 2, 3}, 50), ParameterError);
}
