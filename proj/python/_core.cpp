#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "hypermap/embedder.hpp"
#include "hypermap/io.hpp"
#include "hypermap/linkpred.hpp"
#include "hypermap/metrics.hpp"
#include "hypermap/netgen.hpp"
#include "hypermap/router.hpp"
#include "hypermap/temperature.hpp"

namespace py = pybind11;
using namespace hypermap;

namespace {

using Release = py::call_guard<py::gil_scoped_release>;

ModelParams make_params(double m, double L, double gamma, double T, double zeta, std::int64_t t) {
  ModelParams p{m, L, gamma, T, zeta, t};
  p.validate();
  return p;
}

AdjacencySnapshot make_graph(std::vector<std::string> labels, const std::vector<Edge>& edges) {
  const auto n = labels.size();
  for (const auto& [a, b] : edges)
    if (a >= n || b >= n) throw ParameterError("edge endpoint out of range");
  return AdjacencySnapshot(std::move(labels), edges);
}

NodeId checked(NodeId v, std::size_t n) {
  if (v >= n) throw py::index_error("node " + std::to_string(v) + " out of range");
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hyperbolic network growth, embedding and evaluation";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init(&make_params), py::arg("m") = 1.5, py::arg("L") = 0.0, py::arg("gamma") = 2.1,
           py::arg("T") = 0.4, py::arg("zeta") = 1.0, py::arg("t") = 1)
      .def_readwrite("m", &ModelParams::m)
      .def_readwrite("L", &ModelParams::L)
      .def_readwrite("gamma", &ModelParams::gamma)
      .def_readwrite("T", &ModelParams::T)
      .def_readwrite("zeta", &ModelParams::zeta)
      .def_readwrite("t", &ModelParams::t)
      .def_property_readonly("beta", &ModelParams::beta)
      .def("validate", &ModelParams::validate)
      .def("__repr__", &ModelParams::to_string);

  py::class_<AdjacencySnapshot>(m, "Graph")
      .def(py::init(&make_graph), py::arg("labels"), py::arg("edges"))
      .def_static("from_edges",
                  [](std::size_t n, const std::vector<Edge>& edges) {
                    std::vector<std::string> labels(n);
                    for (std::size_t v = 0; v < n; ++v) labels[v] = std::to_string(v);
                    return make_graph(std::move(labels), edges);
                  },
                  py::arg("n"), py::arg("edges"))
      .def_property_readonly("node_count", &AdjacencySnapshot::node_count)
      .def_property_readonly("edge_count", &AdjacencySnapshot::edge_count)
      .def_property_readonly("labels", &AdjacencySnapshot::labels)
      .def_property_readonly("edges", &AdjacencySnapshot::edges)
      .def_property_readonly("average_degree", &AdjacencySnapshot::average_degree)
      .def("degree", [](const AdjacencySnapshot& g, NodeId v) { return g.degree(checked(v, g.node_count())); })
      .def("neighbors",
           [](const AdjacencySnapshot& g, NodeId v) {
             const auto s = g.neighbors(checked(v, g.node_count()));
             return std::vector<NodeId>(s.begin(), s.end());
           })
      .def("has_edge", [](const AdjacencySnapshot& g, NodeId a, NodeId b) {
        return g.has_edge(checked(a, g.node_count()), checked(b, g.node_count()));
      });

  py::class_<EmbeddingProvenance>(m, "EmbeddingProvenance")
      .def_readonly("correction_degrees", &EmbeddingProvenance::correction_degrees)
      .def_readonly("correction_times", &EmbeddingProvenance::correction_times)
      .def_readonly("correction_passes", &EmbeddingProvenance::correction_passes)
      .def_readonly("search", &EmbeddingProvenance::search)
      .def_readonly("theta1", &EmbeddingProvenance::theta1)
      .def_readonly("warnings", &EmbeddingProvenance::warnings);

  py::class_<Embedding>(m, "Embedding")
      .def_readonly("params", &Embedding::params)
      .def_readonly("order", &Embedding::order)
      .def_readonly("rank", &Embedding::rank)
      .def_readonly("radii", &Embedding::radii)
      .def_readonly("angles", &Embedding::angles)
      .def_readonly("provenance", &Embedding::provenance)
      .def_property_readonly("node_count", &Embedding::node_count)
      .def("distance", [](const Embedding& e, NodeId a, NodeId b) {
        return e.distance(checked(a, e.node_count()), checked(b, e.node_count()));
      });

  py::class_<GrownNetwork>(m, "GrownNetwork")
      .def_readonly("params", &GrownNetwork::params)
      .def_readonly("seed", &GrownNetwork::seed)
      .def_readonly("labels", &GrownNetwork::labels)
      .def("graph", &GrownNetwork::snapshot)
      .def("truth", &truth_embedding);

  m.def(
      "grow",
      [](const ModelParams& p, const std::string& model, std::uint64_t seed, int threads) {
        return grow(p, parse_model_kind(model), seed, threads);
      },
      py::arg("params"), py::arg("model") = "epso", py::arg("seed") = 0, py::arg("threads") = 1, Release());

  m.def(
      "embed",
      [](const AdjacencySnapshot& g, const ModelParams& p, std::vector<int> correction_degrees, int passes,
         double theta1, int threads) {
        EmbedOptions opt;
        opt.correction_degrees = std::move(correction_degrees);
        opt.correction_passes = passes;
        opt.theta1 = theta1;
        opt.threads = threads;
        return embed(g, p, opt);
      },
      py::arg("graph"), py::arg("params"), py::arg("correction_degrees") = std::vector<int>{60, 40, 20, 10},
      py::arg("passes") = 4, py::arg("theta1") = 0.0, py::arg("threads") = 1, Release());

  m.def("infer_birth_order", &infer_birth_order, py::arg("graph"));

  m.def(
      "connection_curve",
      [](const Embedding& e, const AdjacencySnapshot& g, double bin_width, int threads) {
        const auto c = connection_curve(e, g, LikelihoodContext(e.params), bin_width, threads);
        py::dict d;
        d["bin_edges"] = c.bin_edges;
        d["pairs"] = c.pair_counts;
        d["linked"] = c.linked_counts;
        d["empirical"] = c.empirical;
        d["theoretical"] = c.theoretical;
        d["max_deviation"] = c.max_deviation(100);
        return d;
      },
      py::arg("embedding"), py::arg("graph"), py::arg("bin_width") = 1.0, py::arg("threads") = 1);

  m.def(
      "log_loss",
      [](const Embedding& e, const AdjacencySnapshot& g, int n_rand, std::uint64_t seed, int threads) {
        const auto r = logloss_report(e, g, LikelihoodContext(e.params), n_rand, seed, threads);
        return py::make_tuple(r.ll_inf, r.ll_rand, r.r_ll_exponent);
      },
      py::arg("embedding"), py::arg("graph"), py::arg("n_rand") = 10, py::arg("seed") = 0, py::arg("threads") = 1,
      "Returns (LL_inf, mean LL_rand, LL_rand - LL_inf).");

  m.def(
      "routing",
      [](const AdjacencySnapshot& g, const Embedding& e, std::uint64_t samples, std::uint64_t seed, int threads) {
        const auto policy = samples == 0 ? PairPolicy::all() : PairPolicy::sample(samples, seed);
        const auto s = evaluate_routing(g, e, policy, threads);
        return py::dict(py::arg("p_s") = s.p_s, py::arg("h_bar") = s.h_bar, py::arg("stretch") = s.stretch,
                        py::arg("pairs") = s.n_pairs, py::arg("hop_limit_drops") = s.hop_limit_drops);
      },
      py::arg("graph"), py::arg("embedding"), py::arg("samples") = 10'000, py::arg("seed") = 0,
      py::arg("threads") = 1, "Greedy routing over sampled pairs; samples=0 routes all pairs.");

  m.def(
      "route",
      [](NodeId src, NodeId dst, const AdjacencySnapshot& g, const Embedding& e) {
        const auto r = greedy_route(src, dst, g, e);
        return py::make_tuple(std::string(to_string(r.outcome)), r.path);
      },
      py::arg("src"), py::arg("dst"), py::arg("graph"), py::arg("embedding"));

  m.def(
      "link_prediction_auc",
      [](const AdjacencySnapshot& g, double fraction, std::uint64_t seed, const std::string& method,
         const ModelParams& p, bool hard, int threads) {
        const auto sp = split(g, fraction, seed);
        const auto kind = parse_score_method(method);
        const auto stratum = hard ? Stratum::hard() : Stratum::all();
        if (kind == ScoreMethod::kHyperbolic) {
          EmbedOptions opt;
          opt.threads = threads;
          return auc(score_hyperbolic(sp, embed(sp.training, p, opt), threads), sp, stratum, {}, threads).value;
        }
        BaselineOptions bo;
        bo.threads = threads;
        return auc(score_baseline(sp, kind, bo), sp, stratum, {}, threads).value;
      },
      py::arg("graph"), py::arg("fraction"), py::arg("seed"), py::arg("method"), py::arg("params") = ModelParams{},
      py::arg("hard") = false, py::arg("threads") = 1, Release(),
      "Exact AUC after removing `fraction` of the edges; params are used by the hyperbolic method.");

  m.def(
      "infer_temperature",
      [](const AdjacencySnapshot& g, const ModelParams& p, std::vector<double> grid, double tolerance) {
        TemperatureOptions opt;
        opt.convergence_tolerance = tolerance;
        const auto r = infer_temperature(g, p, std::move(grid), opt);
        return py::make_tuple(r.T, std::string(to_string(r.status)));
      },
      py::arg("graph"), py::arg("params"), py::arg("grid"), py::arg("tolerance") = 0.02);

  m.def(
      "read_edge_list", [](const std::filesystem::path& p) { return read_edge_list(p).graph; }, py::arg("path"));
  m.def(
      "write_edge_list",
      [](const AdjacencySnapshot& g, const std::filesystem::path& p) { write_edge_list(g, p); }, py::arg("graph"),
      py::arg("path"));
  m.def(
      "write_coordinates",
      [](const Embedding& e, const std::vector<std::string>& labels, const std::filesystem::path& p) {
        write_coordinates(e, labels, p);
      },
      py::arg("embedding"), py::arg("labels"), py::arg("path"));
  m.def(
      "read_coordinates",
      [](const std::filesystem::path& p, const AdjacencySnapshot* companion) {
        auto r = read_coordinates(p, companion);
        return py::make_tuple(std::move(r.embedding), std::move(r.labels));
      },
      py::arg("path"), py::arg("graph") = nullptr);
}
