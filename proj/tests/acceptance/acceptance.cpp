#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hypermap/embedder.hpp"
#include "hypermap/geometry.hpp"
#include "hypermap/io.hpp"
#include "hypermap/linkpred.hpp"
#include "hypermap/metrics.hpp"
#include "hypermap/model.hpp"
#include "hypermap/netgen.hpp"
#include "hypermap/powerlaw.hpp"
#include "hypermap/rng.hpp"
#include "hypermap/router.hpp"
#include "hypermap/temperature.hpp"
#include "oracles.hpp"

using namespace hypermap;

namespace {

struct Scale {
  std::string name;
  std::int64_t t = 5000;          // main network, criteria 1-5
  double fidelity_tolerance = 0.05;
  double logloss_gap = 5e4;
  std::int64_t temperature_t = 2000;
};

Scale scale_for(const std::string& mode) {
  if (mode == "full") return {"full", 5000, 0.05, 5e4, 2000};
  return {"fast", 1000, 0.08, 5e3, 1000};
}

// Tolerances and targets that do not depend on the mode.
constexpr std::uint64_t kMinPairs = 100;
constexpr std::uint64_t kNetworkSeed = 1;
constexpr std::uint64_t kRouteSamples = 20'000;
constexpr double kRealSuccessLo = 0.91, kRealSuccessHi = 0.97;
constexpr double kRealHopsLo = 3.0, kRealHopsHi = 3.6;
constexpr double kInferredSuccessMin = 0.93, kInferredHopsMax = 4.0;
constexpr double kAucMin = 0.90, kHardMargin = 0.05;
constexpr double kDegreeTolerance = 0.10;
constexpr double kGammaTarget = 2.1, kGammaTolerance = 0.15;
constexpr double kKsMax = 0.03;
constexpr double kMtildeTolerance = 0.20;
constexpr std::int64_t kMtildeFrom = 100;
constexpr double kCurveSupMax = 0.05;
constexpr double kTemperatureTrue = 0.5, kTemperatureStep = 0.2;
constexpr double kOracleTolerance = 1e-9;
constexpr double kBetaContinuity = 1e-4;
constexpr double kScalingExponentMax = 3.3;

ModelParams epso(std::int64_t t, double T) {
  ModelParams p;
  p.m = 1.5;
  p.L = 2.5;
  p.gamma = 2.1;
  p.T = T;
  p.t = t;
  return p;
}

struct Verdict {
  int id;
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared network, its ground truth and the inferred embedding.
struct MainRun {
  ModelParams params;
  GrownNetwork net;
  AdjacencySnapshot graph;
  Embedding truth;
  Embedding inferred;
};

MainRun main_run(const Scale& s, double T, int threads) {
  MainRun r{epso(s.t, T), {}, {}, {}, {}};
  r.net = grow(r.params, ModelKind::kEPSO, kNetworkSeed, threads);
  r.graph = r.net.snapshot();
  r.truth = truth_embedding(r.net);
  EmbedOptions opt;
  opt.threads = threads;
  r.inferred = embed(r.graph, r.params, opt);
  return r;
}

Verdict fidelity(const Scale& s, const MainRun& run, int threads) {
  const LikelihoodContext ctx(run.params);
  const auto curve = connection_curve(run.inferred, run.graph, ctx, 1.0, threads);
  const double dev = curve.max_deviation(kMinPairs);
  std::size_t bins = 0;
  for (auto c : curve.pair_counts) bins += c >= kMinPairs;
  const double truth_dev = connection_curve(run.truth, run.graph, ctx, 1.0, threads).max_deviation(kMinPairs);
  return {1, dev <= s.fidelity_tolerance,
          fmt("round-trip fidelity t=%lld: max |empirical - model| = %.4f over %zu bins (tol %.2f); "
              "ground-truth coordinates give %.4f",
              static_cast<long long>(s.t), dev, bins, s.fidelity_tolerance, truth_dev)};
}

Verdict logloss_gap(const Scale& s, const MainRun& run, int threads) {
  const LikelihoodContext ctx(run.params);
  const auto r = logloss_report(run.inferred, run.graph, ctx, 10, 7, threads);
  return {2, r.r_ll_exponent > s.logloss_gap,
          fmt("log-loss gap t=%lld: LL_rand - LL_inf = %.1f (need > %.0f; LL_inf %.1f)", static_cast<long long>(s.t),
              r.r_ll_exponent, s.logloss_gap, r.ll_inf)};
}

Verdict navigability(const Scale& s, const MainRun& run, int threads) {
  const auto policy = PairPolicy::sample(kRouteSamples, 5);
  const auto real = evaluate_routing(run.graph, run.truth, policy, threads);
  const auto inf = evaluate_routing(run.graph, run.inferred, policy, threads);

  const auto hot = main_run(s, 0.7, threads);
  const auto hot_real = evaluate_routing(hot.graph, hot.truth, policy, threads);
  const auto hot_inf = evaluate_routing(hot.graph, hot.inferred, policy, threads);

  const bool guard = real.hop_limit_drops + inf.hop_limit_drops + hot_real.hop_limit_drops + hot_inf.hop_limit_drops == 0;
  const bool pass = real.p_s >= kRealSuccessLo && real.p_s <= kRealSuccessHi && real.h_bar >= kRealHopsLo &&
                    real.h_bar <= kRealHopsHi && inf.p_s >= kInferredSuccessMin && inf.h_bar <= kInferredHopsMax &&
                    hot_inf.p_s > hot_real.p_s && guard;
  return {3, pass,
          fmt("navigability t=%lld: T=0.4 real p_s %.3f h %.3f, inferred p_s %.3f h %.3f; "
              "T=0.7 inferred p_s %.3f vs real %.3f; hop-guard drops %llu",
              static_cast<long long>(s.t), real.p_s, real.h_bar, inf.p_s, inf.h_bar, hot_inf.p_s, hot_real.p_s,
              static_cast<unsigned long long>(real.hop_limit_drops + inf.hop_limit_drops + hot_real.hop_limit_drops +
                                              hot_inf.hop_limit_drops))};
}

Verdict link_prediction(const Scale& s, const MainRun& run, int threads) {
  const auto sp = split(run.graph, 0.10, 11);
  EmbedOptions opt;
  opt.threads = threads;
  const auto trained = embed(sp.training, run.params, opt);
  double hyp_all = 0.0, hyp_hard = 0.0;
  {
    const auto hs = score_hyperbolic(sp, trained, threads);
    hyp_all = auc(hs, sp, Stratum::all(), AucMode::exact(), threads).value;
    hyp_hard = auc(hs, sp, Stratum::hard(), AucMode::exact(), threads).value;
  }
  BaselineOptions bo;
  bo.threads = threads;
  auto hard_auc = [&](ScoreMethod m) {
    return auc(score_baseline(sp, m, bo), sp, Stratum::hard(), AucMode::exact(), threads).value;
  };
  const double cn = hard_auc(ScoreMethod::kCommonNeighbors);
  const double dp = hard_auc(ScoreMethod::kDegreeProduct);
  const double isp = hard_auc(ScoreMethod::kInverseShortestPath);
  const bool pass = hyp_all >= kAucMin && cn == 0.5 && hyp_hard >= cn + kHardMargin && hyp_hard >= dp + kHardMargin &&
                    hyp_hard >= isp + kHardMargin;
  return {4, pass,
          fmt("link prediction t=%lld p=0.10: hyperbolic AUC %.4f (need >= %.2f); hard stratum hyperbolic %.4f, "
              "CN %.4f, DP %.4f, ISP %.4f",
              static_cast<long long>(s.t), hyp_all, kAucMin, hyp_hard, cn, dp, isp)};
}

Verdict generator_stats(const Scale& s, const MainRun& run, int threads) {
  const auto& p = run.params;
  const auto& g = run.graph;
  const double target = 2.0 * (p.m + p.L);
  const double kbar = g.average_degree();

  std::vector<std::int64_t> deg(g.node_count());
  for (std::size_t v = 0; v < deg.size(); ++v) deg[v] = static_cast<std::int64_t>(g.degree(static_cast<NodeId>(v)));
  const auto fit = fit_power_law_tail(deg);
  const double ks = radial_ks_statistic(run.truth.radii, p);

  // running mean of links to older nodes against the running mean of the
  // expected budget, capped by the number of older nodes
  const auto stats = topology_stats(g, threads);
  double expected = 0.0, worst = 0.0;
  const auto n = static_cast<std::int64_t>(g.node_count());
  for (std::int64_t i = 2; i <= n; ++i) {
    expected += std::min(expected_initial_links(static_cast<double>(i), p), static_cast<double>(i - 1));
    if (i > kMtildeFrom) {
      const double mean = expected / static_cast<double>(i - 1);
      worst = std::max(worst, std::fabs(stats.m_tilde[static_cast<std::size_t>(i)] / mean - 1.0));
    }
  }

  const bool k_ok = std::fabs(kbar / target - 1.0) <= kDegreeTolerance;
  const bool g_ok = std::fabs(fit.gamma - kGammaTarget) <= kGammaTolerance;
  const bool ks_ok = ks < kKsMax;
  const bool m_ok = worst <= kMtildeTolerance;
  return {5, k_ok && g_ok && ks_ok && m_ok,
          fmt("generator t=%lld: kbar %.3f vs %.1f (%s), gamma %.3f (%s), radial KS %.4f (%s), "
              "m-tilde worst deviation %.3f (%s)",
              static_cast<long long>(s.t), kbar, target, k_ok ? "ok" : "off", fit.gamma, g_ok ? "ok" : "off", ks,
              ks_ok ? "ok" : "off", worst, m_ok ? "ok" : "off")};
}

Verdict temperature(const Scale& s, int threads) {
  const auto p = epso(s.temperature_t, kTemperatureTrue);
  const auto g = grow(p, ModelKind::kEPSO, kNetworkSeed, threads).snapshot();
  TemperatureOptions opt;
  opt.convergence_tolerance = kCurveSupMax;
  opt.min_pairs = kMinPairs;
  opt.embed.threads = threads;
  const auto est = infer_temperature(g, p, {0.1, 0.3, 0.5, 0.7, 0.9}, opt);
  double sup = 0.0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) sup = std::max(sup, curve_distance(est.curves[a], est.curves[b], kMinPairs));
  const bool t_ok = std::isfinite(est.T) && std::fabs(est.T - kTemperatureTrue) <= kTemperatureStep + 1e-12;
  return {6, sup <= kCurveSupMax && t_ok,
          fmt("temperature t=%lld: pairwise sup over T in {0.1,0.3,0.5} = %.4f (tol %.2f); "
              "inferred T %.2f, status %s",
              static_cast<long long>(s.temperature_t), sup, kCurveSupMax, est.T, to_string(est.status))};
}

AdjacencySnapshot random_graph(NodeId n, double density, std::uint64_t seed) {
  RandomStream rng(seed, StreamPurpose::kEdgeDraw, n);
  std::vector<Edge> e;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      if (rng.uniform() < density) e.emplace_back(a, b);
  return AdjacencySnapshot::from_edges(n, e);
}

std::size_t auc_oracle_failures() {
  std::size_t bad = 0;
  for (NodeId n = 3; n <= 6; ++n) {
    const auto p = epso(n, 0.4);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::vector<double> angles(n);
    for (NodeId v = 0; v < n; ++v) angles[v] = 1.3 * static_cast<double>(v);
    for (const auto& edges : oracle::all_graphs(n)) {
      if (edges.empty() || edges.size() == static_cast<std::size_t>(n * (n - 1) / 2)) continue;
      const auto g = AdjacencySnapshot::from_edges(n, edges);
      std::vector<Edge> probe;
      for (std::size_t k = 0; k < edges.size(); k += 3) probe.push_back(edges[k]);
      const auto sp = split_from_probe(g, probe);
      std::vector<ScoredPairs> scorers{score_hyperbolic(sp, embedding_from_angles(sp.training, p, order, angles))};
      for (auto m : {ScoreMethod::kCommonNeighbors, ScoreMethod::kDegreeProduct, ScoreMethod::kInverseShortestPath,
                     ScoreMethod::kKatz})
        scorers.push_back(score_baseline(sp, m));
      for (const auto& sc : scorers) {
        std::vector<double> missing, none;
        for (NodeId a = 0; a < n; ++a)
          for (NodeId b = a + 1; b < n; ++b)
            if (!sp.training.has_edge(a, b)) (sp.is_probe(a, b) ? missing : none).push_back(sc.goodness(a, b));
        const double want = oracle::auc_by_pairs(missing, none);
        const double got = auc(sc, sp).value;
        bad += std::fabs(got - want) > kOracleTolerance;
        bad += std::fabs(roc_area(roc_curve(sc, sp)) - got) > kOracleTolerance;
      }
    }
  }
  return bad;
}

std::size_t global_likelihood_failures() {
  std::size_t bad = 0;
  for (NodeId n = 2; n <= 6; ++n) {
    const auto p = epso(n, 0.6);
    const LikelihoodContext ctx(p);
    std::vector<double> r(n), th(n);
    for (NodeId v = 0; v < n; ++v) {
      r[v] = final_radius_for_rank(v + 1, p);
      th[v] = kTwoPi * keyed_uniform(77, StreamPurpose::kNodeAngle, n, v);
    }
    for (const auto& edges : oracle::all_graphs(n)) {
      const auto g = AdjacencySnapshot::from_edges(n, edges);
      for (auto form : {GlobalProbability::kFirstTerm, GlobalProbability::kExactSum}) {
        double product = 1.0;
        for (NodeId a = 0; a < n; ++a)
          for (NodeId b = a + 1; b < n; ++b) {
            const double x = oracle::distance(r[a], th[a], r[b], th[b], p.zeta);
            const double q = form == GlobalProbability::kFirstTerm ? oracle::first_term(x, p) : oracle::exact_sum(x, p);
            product *= g.has_edge(a, b) ? q : 1.0 - q;
          }
        const double want = std::log(product);
        bad += std::fabs(global_log_likelihood(r, th, g, ctx, form) - want) >
               kOracleTolerance * std::max(1.0, std::fabs(want));
      }
    }
  }
  return bad;
}

std::size_t local_likelihood_failures() {
  std::size_t bad = 0;
  for (NodeId n = 2; n <= 6; ++n) {
    const auto p = epso(n, 0.5);
    const double beta = p.beta();
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto g = random_graph(n, 0.5, seed);
      EmbeddingState s(g, p);
      for (std::int64_t k = 1; k <= n; ++k) s.set_theta(k, kTwoPi * keyed_uniform(seed, StreamPurpose::kNodeAngle, n, k));
      for (std::int64_t i = 2; i <= n; ++i) {
        const double ri = 2.0 * std::log(static_cast<double>(i));
        const double R = oracle::radius_threshold(static_cast<double>(i), p,
                                                  p.m + oracle::internal_links(static_cast<double>(i), p));
        for (double theta : {0.0, 1.1, 4.0}) {
          double product = 1.0;
          for (std::int64_t j = 1; j < i; ++j) {
            const double rj = beta * 2.0 * std::log(static_cast<double>(j)) + (1.0 - beta) * ri;
            const double q = oracle::logistic(oracle::distance(ri, theta, rj, s.theta(j), 1.0), R, p.T, 1.0);
            product *= g.has_edge(s.node(i), s.node(j)) ? q : 1.0 - q;
          }
          const double want = std::log(product);
          bad += std::fabs(local_log_likelihood(i, theta, s, g) - want) >
                 kOracleTolerance * std::max(1.0, std::fabs(want));
        }
      }
    }
  }
  return bad;
}

std::size_t katz_failures() {
  std::size_t bad = 0;
  for (NodeId n = 3; n <= 8; ++n)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto g = random_graph(n, 0.45, seed);
      if (g.edge_count() < 2) continue;
      const auto sp = split(g, 0.3, seed);
      for (int lmax = 2; lmax <= 5; ++lmax) {
        BaselineOptions bo;
        bo.katz_max_length = lmax;
        const auto k = score_baseline(sp, ScoreMethod::kKatz, bo);
        for (NodeId a = 0; a < n; ++a)
          for (NodeId b = a + 1; b < n; ++b) {
            double want = 0.0;
            for (int l = 2; l <= lmax; ++l)
              want += std::pow(bo.katz_epsilon, l) * static_cast<double>(oracle::count_walks(sp.training, a, b, l));
            bad += std::fabs(k.score(a, b) - want) > 1e-15 + kOracleTolerance * want;
          }
      }
    }
  return bad;
}

std::size_t beta_continuity_failures() {
  std::size_t bad = 0;
  ModelParams p = epso(10000, 0.5);
  p.m = 1.0;
  p.L = 1.0;
  for (double branch : {0.5, 1.0}) {
    p.gamma = 1.0 + 1.0 / branch;
    for (double i : {2.0, 10.0, 500.0}) {
      p.gamma = 1.0 + 1.0 / branch;
      const double limit = expected_internal_links(i, p);
      for (double d : {1e-7, -1e-7, 1e-6, -1e-6}) {
        p.gamma = 1.0 + 1.0 / (branch + d);
        bad += std::fabs(expected_internal_links(i, p) - limit) > kBetaContinuity * limit;
      }
    }
  }
  return bad;
}

std::size_t triangle_failures() {
  RandomStream s(2024, StreamPurpose::kRandomAngles, 1);
  auto point = [&] { return PolarPoint{18.0 * s.uniform(), kTwoPi * s.uniform()}; };
  std::size_t bad = 0;
  for (int k = 0; k < 100'000; ++k) {
    const auto a = point(), b = point(), c = point();
    bad += hyperbolic_distance(a, c, 1.0) > hyperbolic_distance(a, b, 1.0) + hyperbolic_distance(b, c, 1.0) + 1e-9;
  }
  return bad;
}

Verdict oracles() {
  const std::size_t a = auc_oracle_failures(), g = global_likelihood_failures(), l = local_likelihood_failures(),
                    k = katz_failures(), b = beta_continuity_failures(), t = triangle_failures();
  return {7, a + g + l + k + b + t == 0,
          fmt("oracle suites: mismatches AUC/ROC %zu, global LL %zu, local LL %zu, Katz %zu, beta limits %zu, "
              "triangle %zu",
              a, g, l, k, b, t)};
}

// Everything a pipeline run writes, serialized.
std::string pipeline_bytes(int threads) {
  const auto p = epso(800, 0.4);
  const auto net = grow(p, ModelKind::kEPSO, 3, threads);
  const auto g = net.snapshot();
  EmbedOptions opt;
  opt.threads = threads;
  const auto e = embed(g, p, opt);
  const LikelihoodContext ctx(p);
  std::ostringstream out;
  write_edge_list(g, out);
  write_coordinates(e, g.labels(), out);
  const auto curve = connection_curve(e, g, ctx, 1.0, threads);
  const auto ll = logloss_report(e, g, ctx, 5, 9, threads);
  const auto route = evaluate_routing(g, e, PairPolicy::sample(5000, 4), threads);
  const auto sp = split(g, 0.1, 6);
  const auto a = auc(score_hyperbolic(sp, e, threads), sp, Stratum::all(), AucMode::sample(100'000, 2), threads);
  nlohmann::json j{{"pairs", curve.pair_counts}, {"linked", curve.linked_counts}, {"ll", ll.ll_inf},
                   {"ll_rand", ll.ll_rand_draws}, {"p_s", route.p_s},          {"h", route.h_bar},
                   {"auc", a.value}};
  out << j.dump() << '\n';
  return out.str();
}

Verdict determinism_and_scaling() {
  const auto one = pipeline_bytes(1);
  const bool same = one == pipeline_bytes(1) && one == pipeline_bytes(4);

  std::vector<double> ts, secs;
  for (std::int64_t t : {500, 1000, 2000}) {
    const auto p = epso(t, 0.4);
    const auto g = grow(p, ModelKind::kEPSO, 1).snapshot();
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < (t < 2000 ? 3 : 1); ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      embed(g, p);
      best = std::min(best, seconds_since(t0));
    }
    ts.push_back(std::log(static_cast<double>(t)));
    secs.push_back(std::log(best));
  }
  const double mx = std::accumulate(ts.begin(), ts.end(), 0.0) / 3.0;
  const double my = std::accumulate(secs.begin(), secs.end(), 0.0) / 3.0;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    sxy += (ts[k] - mx) * (secs[k] - my);
    sxx += (ts[k] - mx) * (ts[k] - mx);
  }
  const double slope = sxy / sxx;
  return {8, same && slope <= kScalingExponentMax,
          fmt("determinism and scaling: outputs %s across repeats and threads {1,4} (%zu bytes); "
              "embed time exponent %.2f over t in {500,1000,2000} (max %.1f; %.2fs at t=2000)",
              same ? "identical" : "DIFFER", one.size(), slope, kScalingExponentMax, std::exp(secs.back()))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks for the hypermap library"};
  std::string mode = "fast";
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<int> only;
  std::vector<int> allowed;
  app.add_option("--mode", mode, "fast (t=1000) or full (t=5000)")->check(CLI::IsMember({"fast", "full"}));
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--only", only, "Run only these criteria")->delimiter(',')->check(CLI::Range(1, 8));
  app.add_option("--allow-fail", allowed,
                 "Criteria whose FAIL does not change the exit status (still reported as FAIL)")
      ->delimiter(',')
      ->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  const auto scale = scale_for(mode);
  auto wanted = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
  std::cout << "acceptance mode " << scale.name << ", threads " << threads << std::endl;

  std::vector<Verdict> verdicts;
  auto report = [&](Verdict v, double secs) {
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << v.id << ": " << v.detail << " [" << fmt("%.1f", secs)
              << "s]" << std::endl;
    verdicts.push_back(std::move(v));
  };
  auto timed = [&](int id, const std::function<Verdict()>& f) {
    if (!wanted(id)) return;
    const auto t0 = std::chrono::steady_clock::now();
    auto v = f();
    report(std::move(v), seconds_since(t0));
  };

  std::optional<MainRun> run;
  if (wanted(1) || wanted(2) || wanted(3) || wanted(4) || wanted(5)) {
    const auto t0 = std::chrono::steady_clock::now();
    run = main_run(scale, 0.4, threads);
    std::cout << "main network t=" << scale.t << ": " << run->graph.edge_count() << " edges, embedded in "
              << fmt("%.1f", seconds_since(t0)) << "s" << std::endl;
  }
  timed(1, [&] { return fidelity(scale, *run, threads); });
  timed(2, [&] { return logloss_gap(scale, *run, threads); });
  timed(3, [&] { return navigability(scale, *run, threads); });
  timed(4, [&] { return link_prediction(scale, *run, threads); });
  timed(5, [&] { return generator_stats(scale, *run, threads); });
  timed(6, [&] { return temperature(scale, threads); });
  timed(7, [] { return oracles(); });
  timed(8, [] { return determinism_and_scaling(); });

  int blocking = 0;
  for (const auto& v : verdicts)
    if (!v.pass && std::find(allowed.begin(), allowed.end(), v.id) == allowed.end()) ++blocking;
  const auto failed = std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.pass; });
  std::cout << verdicts.size() - failed << "/" << verdicts.size() << " criteria passed";
  if (failed > blocking) std::cout << "; " << failed - blocking << " failure(s) listed as known";
  std::cout << std::endl;
  return blocking == 0 ? 0 : 1;
}
