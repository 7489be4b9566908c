#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypermap/embedder.hpp"
#include "hypermap/io.hpp"
#include "hypermap/linkpred.hpp"
#include "hypermap/metrics.hpp"
#include "hypermap/model.hpp"
#include "hypermap/netgen.hpp"
#include "hypermap/powerlaw.hpp"
#include "hypermap/router.hpp"
#include "hypermap/temperature.hpp"
#include "json_config.hpp"

#ifndef HYPERMAP_VERSION
#define HYPERMAP_VERSION "unknown"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hypermap;

namespace {

std::string real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_table(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  return out;
}

struct Common {
  int threads = 1;
  std::uint64_t seed = 1;
  std::string out = ".";
};

struct ModelFlags {
  ModelParams params;
  CLI::Option* m = nullptr;
  CLI::Option* L = nullptr;
  CLI::Option* gamma = nullptr;
  CLI::Option* T = nullptr;
};

struct EmbedFlags {
  std::vector<int> correction_degrees{60, 40, 20, 10};
  int passes = 4;
  double theta1 = 0.0;
  std::optional<std::uint64_t> theta1_seed;
  double spacing = 0.0;
  std::string search = "branch-and-bound";
};

struct Run {
  CLI::App* app = nullptr;
  Common common;
  std::chrono::steady_clock::time_point start;
  json seeds = json::object();
  json outputs = json::array();
  json extra = json::object();
  bool estimates_params = false;

  fs::path out(const std::string& name) {
    outputs.push_back(name);
    return fs::path(common.out) / name;
  }

  // Estimated parameters stay out so replaying the config estimates them again.
  json config_dump() const {
    json c = cli::JsonConfig::to_json(app, true);
    if (estimates_params) {
      for (const char* name : {"m", "L", "gamma"}) {
        if (app->get_option(std::string("--") + name)->count() == 0) c.erase(name);
      }
    }
    return c;
  }

  void finish() {
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json prov = {{"command", app->get_name()},
                 {"version", HYPERMAP_VERSION},
                 {"config", config_dump()},
                 {"seeds", seeds},
                 {"threads", common.threads},
                 {"outputs", outputs},
                 {"wall_time_seconds", wall}};
    for (auto& [k, v] : extra.items()) prov[k] = v;
    write_json(prov, fs::path(common.out) / "provenance.json");
  }
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, Run& run) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("--threads", run.common.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--seed", run.common.seed, "64-bit seed for every random choice")->capture_default_str();
  sub->add_option("--out", run.common.out, "Output directory")->capture_default_str();
  return sub;
}

void add_model_flags(CLI::App* sub, ModelFlags& f, bool with_t) {
  f.m = sub->add_option("--m", f.params.m, "Initial links per node")->capture_default_str();
  f.L = sub->add_option("--L", f.params.L, "Internal link rate")->capture_default_str();
  f.gamma = sub->add_option("--gamma", f.params.gamma, "Degree exponent")->capture_default_str();
  f.T = sub->add_option("--T", f.params.T, "Temperature")->capture_default_str();
  sub->add_option("--zeta", f.params.zeta, "Curvature parameter")->capture_default_str();
  if (with_t) sub->add_option("--t", f.params.t, "Number of nodes")->capture_default_str();
}

void add_embed_flags(CLI::App* sub, EmbedFlags& f) {
  sub->add_option("--correction-degrees", f.correction_degrees, "Degree thresholds that trigger corrections")
      ->capture_default_str();
  sub->add_option("--passes", f.passes, "Sweeps per correction step")->capture_default_str();
  auto* fixed = sub->add_option("--theta1", f.theta1, "Angle of the first node")->capture_default_str();
  sub->add_option("--random-theta1", f.theta1_seed, "Draw the first angle from this seed")->excludes(fixed);
  sub->add_option("--spacing", f.spacing, "Fixed angular spacing (0: 1/i)")->capture_default_str();
  sub->add_option("--search", f.search, "Grid search strategy")
      ->capture_default_str()
      ->check(CLI::IsMember({"branch-and-bound", "exhaustive"}));
}

EmbedOptions embed_options(const EmbedFlags& f, int threads) {
  EmbedOptions o;
  o.correction_degrees = f.correction_degrees;
  o.correction_passes = f.passes;
  o.theta1 = f.theta1;
  o.random_theta1_seed = f.theta1_seed;
  o.fixed_spacing = f.spacing;
  o.search = f.search == "exhaustive" ? GridSearch::kExhaustive : GridSearch::kBranchAndBound;
  o.threads = threads;
  return o;
}

// Fills unset m, L, gamma from the topology.
ParameterEstimate resolve_params(const AdjacencySnapshot& g, const ModelFlags& f) {
  const bool m = f.m->count() == 0;
  const bool L = f.L->count() == 0;
  const bool gamma = f.gamma->count() == 0;
  auto est = estimate_parameters(g, f.params, m, L, gamma);
  return est;
}

std::string params_source(const ModelFlags& f) {
  std::vector<std::string> estimated;
  if (f.m->count() == 0) estimated.push_back("m");
  if (f.L->count() == 0) estimated.push_back("L");
  if (f.gamma->count() == 0) estimated.push_back("gamma");
  if (estimated.empty()) return "given";
  std::string s = "estimated:";
  for (const auto& e : estimated) s += " " + e;
  return s;
}

AdjacencySnapshot load_edges(const std::string& path, Run& run) {
  auto r = read_edge_list(fs::path(path));
  if (r.duplicate_edges > 0 || r.self_loops > 0) {
    std::cerr << "warning: dropped " << r.duplicate_edges << " duplicate edges and " << r.self_loops
              << " self-loops\n";
  }
  run.extra["input"] = {{"edges", path},
                        {"nodes", r.graph.node_count()},
                        {"links", r.graph.edge_count()},
                        {"duplicate_edges", r.duplicate_edges},
                        {"self_loops", r.self_loops}};
  return std::move(r.graph);
}

Embedding run_embed(const AdjacencySnapshot& g, const ModelFlags& mf, const EmbedFlags& ef, int threads) {
  auto est = resolve_params(g, mf);
  auto e = embed(g, est.params, embed_options(ef, threads));
  e.provenance.params_source = params_source(mf);
  e.provenance.gamma_fit = est.gamma_fit;
  for (const auto& w : e.provenance.warnings) std::cerr << "warning: " << w << '\n';
  return e;
}

void write_curve(const ConnectionProbabilityCurve& c, std::ostream& out) {
  out << "bin_lo\tbin_hi\tpairs\tlinked\tempirical\ttheoretical\ttheoretical_first_term\n";
  for (std::size_t b = 0; b < c.bins(); ++b) {
    out << real(c.bin_edges[b]) << '\t' << real(c.bin_edges[b + 1]) << '\t' << c.pair_counts[b] << '\t'
        << c.linked_counts[b] << '\t' << real(c.empirical[b]) << '\t' << real(c.theoretical[b]) << '\t'
        << real(c.theoretical_first_term[b]) << '\n';
  }
}

void write_by_degree(const std::vector<DegreeAverage>& rows, const std::string& column, const fs::path& path) {
  auto out = open_table(path);
  out << "k\tnodes\t" << column << '\n';
  for (const auto& r : rows) out << r.degree << '\t' << r.count << '\t' << real(r.value) << '\n';
}

Stratum parse_stratum(const std::string& s) {
  if (s == "all") return Stratum::all();
  if (s == "hard") return Stratum::hard();
  const std::string prefix = "low_degree:";
  if (s.rfind(prefix, 0) == 0) return Stratum::low_degree(std::stoll(s.substr(prefix.size())));
  throw ParameterError("unknown stratum: " + s + " (use all, hard, low_degree:K)");
}

json error_json(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic network generation, embedding and evaluation"};
  app.set_version_flag("--version", HYPERMAP_VERSION);
  app.require_subcommand(1);
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.fallthrough();
  app.config_formatter(std::make_shared<cli::JsonConfig>(&app));
  app.set_config("--config", "", "JSON file with option values for the subcommand; flags override it");

  Run run;
  run.start = std::chrono::steady_clock::now();

  // generate
  ModelFlags gen_model;
  std::string gen_kind = "epso";
  auto* gen = add_command(app, "generate", "Grow a synthetic network", run);
  add_model_flags(gen, gen_model, true);
  gen->add_option("--model", gen_kind, "pso, gpso or epso")
      ->capture_default_str()
      ->check(CLI::IsMember({"pso", "gpso", "epso"}));

  // embed
  ModelFlags emb_model;
  EmbedFlags emb_flags;
  std::string emb_edges;
  auto* emb = add_command(app, "embed", "Infer hyperbolic coordinates", run);
  emb->add_option("--edges", emb_edges, "Edge list")->required();
  add_model_flags(emb, emb_model, false);
  add_embed_flags(emb, emb_flags);

  // validate
  std::string val_edges, val_coords, val_form = "exact";
  double val_bin = 1.0;
  int val_rand = 10;
  std::uint64_t val_min_pairs = 100;
  std::string val_ll_form = "first-term";
  auto* val = add_command(app, "validate", "Connection probability and log loss", run);
  val->add_option("--edges", val_edges, "Edge list")->required();
  val->add_option("--coords", val_coords, "Coordinate file")->required();
  val->add_option("--bin-width", val_bin, "Distance bin width")->capture_default_str();
  val->add_option("--n-rand", val_rand, "Random angle draws")->capture_default_str()->check(CLI::PositiveNumber);
  val->add_option("--min-pairs", val_min_pairs, "Bins with fewer pairs are ignored in deviations")
      ->capture_default_str();
  val->add_option("--likelihood", val_ll_form, "Global probability in the log loss")
      ->capture_default_str()
      ->check(CLI::IsMember({"first-term", "exact"}));

  // linkpred
  ModelFlags lp_model;
  EmbedFlags lp_embed;
  std::string lp_edges;
  double lp_p = 0.1;
  std::int64_t lp_kmin = -1;
  std::vector<std::string> lp_methods{"hyperbolic", "CN", "DP", "ISP", "Katz"};
  std::vector<std::string> lp_strata{"all", "hard"};
  std::string lp_mode = "exact";
  std::uint64_t lp_samples = 1'000'000;
  double lp_eps = 0.005;
  int lp_lmax = 6;
  bool lp_roc = false;
  bool lp_dump = false;
  auto* lp = add_command(app, "linkpred", "Missing-link prediction experiment", run);
  lp->add_option("--edges", lp_edges, "Edge list")->required();
  lp->add_option("--p", lp_p, "Fraction of links removed")->capture_default_str();
  lp->add_option("--k-min", lp_kmin, "Keep only nodes with degree > k_min (-1: keep all)")->capture_default_str();
  lp->add_option("--methods", lp_methods, "Scorers")->capture_default_str();
  lp->add_option("--strata", lp_strata, "all, hard, low_degree:K")->capture_default_str();
  lp->add_option("--auc-mode", lp_mode, "exact or sampled")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "sampled"}));
  lp->add_option("--samples", lp_samples, "Draws for sampled AUC")->capture_default_str();
  lp->add_option("--katz-eps", lp_eps, "Katz walk weight")->capture_default_str();
  lp->add_option("--katz-lmax", lp_lmax, "Longest Katz walk")->capture_default_str();
  lp->add_flag("--roc", lp_roc, "Write ROC tables");
  lp->add_flag("--dump-scores", lp_dump, "Write scores of every unlinked training pair");
  add_model_flags(lp, lp_model, false);
  add_embed_flags(lp, lp_embed);

  // route
  std::string rt_edges, rt_coords;
  std::uint64_t rt_pairs = 10'000;
  bool rt_all = false;
  bool rt_trace = false;
  auto* rt = add_command(app, "route", "Greedy routing evaluation", run);
  rt->add_option("--edges", rt_edges, "Edge list")->required();
  rt->add_option("--coords", rt_coords, "Coordinate file")->required();
  auto* pairs_opt = rt->add_option("--pairs", rt_pairs, "Sampled ordered pairs")->capture_default_str();
  rt->add_flag("--all-pairs", rt_all, "Route every ordered pair")->excludes(pairs_opt);
  rt->add_flag("--trace", rt_trace, "Write per-pair hop sequences");

  // infer-temp
  ModelFlags it_model;
  EmbedFlags it_embed;
  std::string it_edges;
  std::vector<double> it_grid{0.1, 0.3, 0.5, 0.7, 0.9};
  TemperatureOptions it_opts;
  auto* it = add_command(app, "infer-temp", "Temperature sweep", run);
  it->add_option("--edges", it_edges, "Edge list")->required();
  it->add_option("--grid", it_grid, "Temperatures to embed at")->capture_default_str();
  it->add_option("--tolerance", it_opts.convergence_tolerance, "Sup-norm for curve agreement")->capture_default_str();
  it->add_option("--min-pairs", it_opts.min_pairs, "Bins with fewer pairs are ignored")->capture_default_str();
  it->add_option("--tail-begin", it_opts.tail_begin, "Fit window start")->capture_default_str();
  it->add_option("--tail-end", it_opts.tail_end, "Fit window end");
  add_model_flags(it, it_model, false);
  add_embed_flags(it, it_embed);

  // stats
  std::string st_edges;
  auto* st = add_command(app, "stats", "Topology statistics", run);
  st->add_option("--edges", st_edges, "Edge list")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json("usage", e.what()).dump() << '\n';
    return e.get_exit_code() != 0 ? e.get_exit_code() : 2;
  }

  try {
    const int threads = run.common.threads;
    const std::uint64_t seed = run.common.seed;
    fs::create_directories(run.common.out);

    if (gen->parsed()) {
      run.app = gen;
      const auto kind = parse_model_kind(gen_kind);
      auto net = grow(gen_model.params, kind, seed, threads);
      run.seeds["generate"] = seed;
      const auto g = net.snapshot();
      write_edge_list(g, run.out("edges.txt"));
      write_coordinates(truth_embedding(net), net.labels, run.out("truth.txt"));
      auto table = open_table(run.out("expected_degree.tsv"));
      table << "i\texpected_degree\n";
      for (const auto& p : expected_degree_curve(gen_model.params)) table << p.i << '\t' << real(p.degree) << '\n';
      run.extra["result"] = {{"nodes", g.node_count()},
                             {"links", g.edge_count()},
                             {"average_degree", g.average_degree()},
                             {"internal_link_shortfall", net.internal_link_shortfall}};
    } else if (emb->parsed()) {
      run.app = emb;
      run.estimates_params = true;
      const auto g = load_edges(emb_edges, run);
      const auto e = run_embed(g, emb_model, emb_flags, threads);
      write_coordinates(e, g.labels(), run.out("coords.txt"));
      run.extra["params"] = to_json(e.params);
      run.extra["embedding"] = to_json(e.provenance);
      if (emb_flags.theta1_seed) run.seeds["theta1"] = *emb_flags.theta1_seed;
    } else if (val->parsed()) {
      run.app = val;
      const auto g = load_edges(val_edges, run);
      const auto c = read_coordinates(fs::path(val_coords), &g);
      const LikelihoodContext ctx(c.embedding.params);
      const auto curve = connection_curve(c.embedding, g, ctx, val_bin, threads);
      auto table = open_table(run.out("connection_probability.tsv"));
      write_curve(curve, table);
      const auto form = val_ll_form == "exact" ? GlobalProbability::kExactSum : GlobalProbability::kFirstTerm;
      const auto ll = logloss_report(c.embedding, g, ctx, val_rand, seed, threads, form);
      run.seeds["random_angles"] = seed;
      json summary = {{"params", to_json(c.embedding.params)},
                      {"bin_width", val_bin},
                      {"min_pairs", val_min_pairs},
                      {"max_deviation_exact_sum", curve.max_deviation(val_min_pairs)},
                      {"max_deviation_first_term", curve.max_deviation(val_min_pairs, GlobalProbability::kFirstTerm)},
                      {"likelihood_form", val_ll_form},
                      {"ll_inf", ll.ll_inf},
                      {"ll_rand", ll.ll_rand},
                      {"ll_rand_draws", ll.ll_rand_draws},
                      {"r_ll_exponent", ll.r_ll_exponent},
                      {"n_rand", ll.n_rand}};
      write_json(summary, run.out("validate.json"));
    } else if (lp->parsed()) {
      run.app = lp;
      run.estimates_params = true;
      auto g = load_edges(lp_edges, run);
      if (lp_kmin >= 0) g = filter_min_degree(g, lp_kmin);
      const auto s = split(g, lp_p, seed);
      run.seeds["split"] = seed;
      write_edge_list(s.training, run.out("training.txt"));
      {
        auto out = open_table(run.out("probe.txt"));
        for (const auto& [a, b] : s.probe) out << g.label(a) << ' ' << g.label(b) << '\n';
      }
      std::vector<Stratum> strata;
      for (const auto& name : lp_strata) strata.push_back(parse_stratum(name));
      const AucMode mode = lp_mode == "sampled" ? AucMode::sample(lp_samples, seed) : AucMode::exact();
      BaselineOptions bo{lp_eps, lp_lmax, threads};

      json report = {{"nodes", g.node_count()},   {"links", g.edge_count()},
                     {"probe", s.probe.size()},   {"removal_fraction", lp_p},
                     {"k_min", lp_kmin},          {"auc_mode", lp_mode},
                     {"scorers", json::object()}};
      for (const auto& name : lp_methods) {
        const auto method = parse_score_method(name);
        std::optional<ScoredPairs> scored;
        if (method == ScoreMethod::kHyperbolic) {
          const auto e = run_embed(s.training, lp_model, lp_embed, threads);
          write_coordinates(e, s.training.labels(), run.out("training_coords.txt"));
          report["training_params"] = to_json(e.params);
          scored.emplace(score_hyperbolic(s, e, threads));
        } else {
          scored.emplace(score_baseline(s, method, bo));
        }
        json entry = {{"settings", scored->settings},
                      {"orientation", scored->orientation() == Orientation::kSmallerBetter ? "smaller" : "larger"}};
        for (const auto& stratum : strata) {
          const auto a = auc(*scored, s, stratum, mode, threads);
          entry["auc"][stratum.name()] = {{"defined", a.defined},
                                          {"value", a.defined ? json(a.value) : json(nullptr)},
                                          {"missing_pairs", a.missing_pairs},
                                          {"nonexistent_pairs", a.nonexistent_pairs}};
          if (lp_roc) {
            auto out = open_table(run.out("roc_" + scored->name() + "_" + stratum.name() + ".tsv"));
            out << "fpr\ttpr\n";
            for (const auto& p : roc_curve(*scored, s, stratum, threads)) out << real(p.fpr) << '\t' << real(p.tpr) << '\n';
          }
        }
        if (lp_dump) {
          auto out = open_table(run.out("scores_" + scored->name() + ".tsv"));
          out << "a\tb\tscore\tprobe\n";
          const auto n = static_cast<NodeId>(g.node_count());
          for (NodeId a = 0; a < n; ++a) {
            for (NodeId b = a + 1; b < n; ++b) {
              if (s.training.has_edge(a, b)) continue;
              out << g.label(a) << '\t' << g.label(b) << '\t' << real(scored->score(a, b)) << '\t'
                  << (s.is_probe(a, b) ? 1 : 0) << '\n';
            }
          }
        }
        report["scorers"][scored->name()] = entry;
      }
      write_json(report, run.out("linkpred.json"));
    } else if (rt->parsed()) {
      run.app = rt;
      const auto g = load_edges(rt_edges, run);
      const auto c = read_coordinates(fs::path(rt_coords), &g);
      const auto policy = rt_all ? PairPolicy::all() : PairPolicy::sample(rt_pairs, seed);
      const auto stats = evaluate_routing(g, c.embedding, policy, threads, rt_trace);
      if (!rt_all) run.seeds["pairs"] = seed;
      json summary = {{"p_s", stats.p_s},
                      {"h_bar", stats.h_bar},
                      {"stretch", stats.stretch},
                      {"n_pairs", stats.n_pairs},
                      {"delivered", stats.delivered},
                      {"local_minimum_drops", stats.local_minimum_drops},
                      {"hop_limit_drops", stats.hop_limit_drops},
                      {"giant_size", stats.giant_size},
                      {"policy", rt_all ? "all_pairs" : "sample"}};
      write_json(summary, run.out("route.json"));
      if (rt_trace) {
        auto out = open_table(run.out("trace.tsv"));
        out << "source\tdestination\toutcome\thops\tshortest\tpath\n";
        for (const auto& r : stats.traces) {
          out << g.label(r.src) << '\t' << g.label(r.dst) << '\t' << to_string(r.route.outcome) << '\t'
              << r.route.hops() << '\t' << r.shortest << '\t';
          for (std::size_t k = 0; k < r.route.path.size(); ++k) out << (k ? "," : "") << g.label(r.route.path[k]);
          out << '\n';
        }
      }
    } else if (it->parsed()) {
      run.app = it;
      run.estimates_params = true;
      const auto g = load_edges(it_edges, run);
      auto est = resolve_params(g, it_model);
      it_opts.embed = embed_options(it_embed, threads);
      const auto t = infer_temperature(g, est.params, it_grid, it_opts);
      auto out = open_table(run.out("temperature_curves.tsv"));
      out << "T\tbin_lo\tpairs\tempirical\ttheoretical\n";
      for (std::size_t k = 0; k < t.grid.size(); ++k) {
        const auto& c = t.curves[k];
        for (std::size_t b = 0; b < c.bins(); ++b) {
          out << real(t.grid[k]) << '\t' << real(c.bin_edges[b]) << '\t' << c.pair_counts[b] << '\t'
              << real(c.empirical[b]) << '\t' << real(c.theoretical[b]) << '\n';
        }
      }
      json summary = {{"status", to_string(t.status)},
                      {"T", std::isnan(t.T) ? json(nullptr) : json(t.T)},
                      {"grid", t.grid},
                      {"successive_distance", t.successive_distance},
                      {"converged_count", t.converged_count},
                      {"fit_error", t.fit_error},
                      {"params", to_json(est.params)},
                      {"gamma_fit", est.gamma_fit}};
      write_json(summary, run.out("temperature.json"));
    } else if (st->parsed()) {
      run.app = st;
      const auto g = load_edges(st_edges, run);
      const auto s = topology_stats(g, threads);
      write_by_degree(s.degree_distribution, "P", run.out("degree_distribution.tsv"));
      write_by_degree(s.clustering, "clustering", run.out("clustering.tsv"));
      write_by_degree(s.neighbor_degree, "knn", run.out("neighbor_degree.tsv"));
      write_by_degree(s.betweenness, "betweenness", run.out("betweenness.tsv"));
      {
        auto out = open_table(run.out("distance_distribution.tsv"));
        out << "l\td\n";
        for (std::size_t l = 1; l < s.distance_distribution.size(); ++l) {
          out << l << '\t' << real(s.distance_distribution[l]) << '\n';
        }
      }
      {
        auto out = open_table(run.out("m_tilde.tsv"));
        out << "i\tlinks_to_older\tm_tilde\n";
        for (std::size_t i = 2; i < s.m_tilde.size(); ++i) {
          out << i << '\t' << s.links_to_older[i] << '\t' << real(s.m_tilde[i]) << '\n';
        }
      }
      std::vector<std::int64_t> degrees(g.node_count());
      for (std::size_t v = 0; v < g.node_count(); ++v) degrees[v] = static_cast<std::int64_t>(g.degree(static_cast<NodeId>(v)));
      json summary = {{"nodes", s.node_count},
                      {"links", g.edge_count()},
                      {"giant_size", s.giant_size},
                      {"average_degree", s.average_degree},
                      {"average_clustering", s.average_clustering}};
      try {
        const auto fit = fit_power_law_tail(degrees);
        summary["power_law"] = {{"gamma", fit.gamma}, {"k_min", fit.k_min}, {"tail", fit.tail_size}, {"ks", fit.ks_distance}};
      } catch (const ParameterError& e) {
        summary["power_law"] = {{"error", e.what()}};
      }
      write_json(summary, run.out("stats.json"));
    }
    run.finish();
  } catch (const FormatError& e) {
    std::cerr << error_json("format", e.what()).dump() << '\n';
    return 3;
  } catch (const ParameterError& e) {
    std::cerr << error_json("parameter", e.what()).dump() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << error_json("runtime", e.what()).dump() << '\n';
    return 5;
  }
  return 0;
}
