#include "hypermap/linkpred.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>

#include "hypermap/params.hpp"
#include "hypermap/parallel.hpp"
#include "hypermap/rng.hpp"

namespace hypermap {
namespace {

LinkSplit make_split(const AdjacencySnapshot& net, std::vector<Edge> probe) {
  LinkSplit s;
  std::sort(probe.begin(), probe.end());
  for (const auto& e : probe) s.probe_index.insert(pair_key(e.first, e.second));
  std::vector<Edge> training;
  training.reserve(net.edge_count() - probe.size());
  for (const auto& e : net.edges()) {
    if (!s.probe_index.contains(pair_key(e.first, e.second))) training.push_back(e);
  }
  s.training = AdjacencySnapshot(net.labels(), training);
  s.probe = std::move(probe);
  if (net.edge_count() > 0) s.fraction = static_cast<double>(s.probe.size()) / static_cast<double>(net.edge_count());
  return s;
}

// Common-neighbor counts between i and every node, touching only 2-hop nodes.
class CommonNeighborRow {
 public:
  explicit CommonNeighborRow(std::size_t n) : count_(n, 0) {}

  void load(const AdjacencySnapshot& g, NodeId i) {
    for (NodeId v : touched_) count_[v] = 0;
    touched_.clear();
    for (NodeId w : g.neighbors(i)) {
      for (NodeId u : g.neighbors(w)) {
        if (u == i) continue;
        if (count_[u]++ == 0) touched_.push_back(u);
      }
    }
  }
  std::uint32_t operator[](NodeId j) const { return count_[j]; }

 private:
  std::vector<std::uint32_t> count_;
  std::vector<NodeId> touched_;
};

std::size_t common_neighbors(const AdjacencySnapshot& g, NodeId a, NodeId b) {
  const auto na = g.neighbors(a);
  const auto nb = g.neighbors(b);
  std::size_t c = 0;
  auto ia = na.begin();
  auto ib = nb.begin();
  while (ia != na.end() && ib != nb.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++c;
      ++ia;
      ++ib;
    }
  }
  return c;
}

bool low_degree_ok(const AdjacencySnapshot& g, const Stratum& s, NodeId a, NodeId b) {
  if (s.kind != Stratum::Kind::kLowDegree) return true;
  return static_cast<std::int64_t>(g.degree(a)) < s.k_max && static_cast<std::int64_t>(g.degree(b)) < s.k_max;
}

void check_nodes(const ScoredPairs& scored, const LinkSplit& split) {
  if (scored.node_count() != split.training.node_count()) throw ParameterError("scores do not match the split");
}

std::vector<double> missing_goodness(const ScoredPairs& scored, const LinkSplit& split, const Stratum& stratum) {
  std::vector<double> out;
  for (const auto& [a, b] : split.probe) {
    if (!low_degree_ok(split.training, stratum, a, b)) continue;
    if (stratum.kind == Stratum::Kind::kNoCommonNeighbor && common_neighbors(split.training, a, b) != 0) continue;
    out.push_back(scored.goodness(a, b));
  }
  return out;
}

// Calls fn(row, goodness) for every nonexistent pair (row < j) of the
// stratum; rows are split across workers.
template <typename Fn>
void for_each_nonexistent(const ScoredPairs& scored, const LinkSplit& split, const Stratum& stratum, int threads,
                          Fn&& fn) {
  const auto& g = split.training;
  const std::size_t n = g.node_count();
  parallel_for(n, threads, [&](std::size_t lo, std::size_t hi) {
    CommonNeighborRow cn(n);
    for (std::size_t i = lo; i < hi; ++i) {
      const auto a = static_cast<NodeId>(i);
      if (stratum.kind == Stratum::Kind::kNoCommonNeighbor) cn.load(g, a);
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto b = static_cast<NodeId>(j);
        if (split.is_edge(a, b) || !low_degree_ok(g, stratum, a, b)) continue;
        if (stratum.kind == Stratum::Kind::kNoCommonNeighbor && cn[b] != 0) continue;
        fn(i, scored.goodness(a, b));
      }
    }
  });
}

}  // namespace

LinkSplit split(const AdjacencySnapshot& net, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("removal fraction must lie in (0, 1)");
  const std::size_t m = net.edge_count();
  const double target = std::round(p * static_cast<double>(m));
  if (target < 1.0) throw ParameterError("removal fraction selects no edge");
  const auto k = static_cast<std::size_t>(target);
  std::vector<Edge> edges = net.edges();
  RandomStream rng(seed, StreamPurpose::kLinkSplit, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(m - i));
    std::swap(edges[i], edges[j]);
  }
  edges.resize(k);
  auto s = make_split(net, std::move(edges));
  s.fraction = p;
  s.seed = seed;
  return s;
}

LinkSplit split_from_probe(const AdjacencySnapshot& net, const std::vector<Edge>& probe) {
  std::vector<Edge> normalized;
  for (auto [a, b] : probe) {
    if (!net.has_edge(a, b)) throw ParameterError("probe pair is not an edge of the network");
    normalized.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  return make_split(net, std::move(normalized));
}

AdjacencySnapshot filter_min_degree(const AdjacencySnapshot& net, std::int64_t k_min) {
  std::vector<NodeId> remap(net.node_count(), static_cast<NodeId>(-1));
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    if (static_cast<std::int64_t>(net.degree(static_cast<NodeId>(v))) > k_min) {
      remap[v] = static_cast<NodeId>(labels.size());
      labels.push_back(net.label(static_cast<NodeId>(v)));
    }
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : net.edges()) {
    if (remap[a] != static_cast<NodeId>(-1) && remap[b] != static_cast<NodeId>(-1)) edges.emplace_back(remap[a], remap[b]);
  }
  return AdjacencySnapshot(std::move(labels), edges);
}

std::string to_string(ScoreMethod m) {
  switch (m) {
    case ScoreMethod::kHyperbolic:
      return "hyperbolic";
    case ScoreMethod::kCommonNeighbors:
      return "CN";
    case ScoreMethod::kDegreeProduct:
      return "DP";
    case ScoreMethod::kInverseShortestPath:
      return "ISP";
    case ScoreMethod::kKatz:
      return "Katz";
  }
  return "unknown";
}

ScoreMethod parse_score_method(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "hyperbolic" || s == "hyp") return ScoreMethod::kHyperbolic;
  if (s == "cn") return ScoreMethod::kCommonNeighbors;
  if (s == "dp") return ScoreMethod::kDegreeProduct;
  if (s == "isp") return ScoreMethod::kInverseShortestPath;
  if (s == "katz") return ScoreMethod::kKatz;
  throw ParameterError("unknown scoring method: " + name);
}

ScoredPairs::ScoredPairs(std::string name, Orientation orientation, std::size_t n)
    : name_(std::move(name)), orientation_(orientation), n_(n), values_(n > 1 ? n * (n - 1) / 2 : 0, 0.0) {}

ScoredPairs score_hyperbolic(const LinkSplit& split, const Embedding& training_embedding, int threads) {
  const std::size_t n = split.training.node_count();
  if (training_embedding.node_count() != n) throw ParameterError("embedding does not match the training graph");
  ScoredPairs out(to_string(ScoreMethod::kHyperbolic), Orientation::kSmallerBetter, n);
  out.settings = "final-time hyperbolic distance";
  parallel_for(n, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        out.set(static_cast<NodeId>(i), static_cast<NodeId>(j),
                training_embedding.distance(static_cast<NodeId>(i), static_cast<NodeId>(j)));
      }
    }
  });
  return out;
}

ScoredPairs score_baseline(const LinkSplit& split, ScoreMethod method, const BaselineOptions& options) {
  const auto& g = split.training;
  const std::size_t n = g.node_count();
  ScoredPairs out(to_string(method), Orientation::kLargerBetter, n);
  switch (method) {
    case ScoreMethod::kHyperbolic:
      throw ParameterError("hyperbolic scores need an embedding; use score_hyperbolic");
    case ScoreMethod::kCommonNeighbors:
      out.settings = "|N(i) & N(j)|";
      parallel_for(n, options.threads, [&](std::size_t lo, std::size_t hi) {
        CommonNeighborRow cn(n);
        for (std::size_t i = lo; i < hi; ++i) {
          cn.load(g, static_cast<NodeId>(i));
          for (std::size_t j = i + 1; j < n; ++j) {
            out.set(static_cast<NodeId>(i), static_cast<NodeId>(j), cn[static_cast<NodeId>(j)]);
          }
        }
      });
      break;
    case ScoreMethod::kDegreeProduct:
      out.settings = "k_i * k_j";
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          out.set(static_cast<NodeId>(i), static_cast<NodeId>(j),
                  static_cast<double>(g.degree(static_cast<NodeId>(i))) *
                      static_cast<double>(g.degree(static_cast<NodeId>(j))));
        }
      }
      break;
    case ScoreMethod::kInverseShortestPath:
      out.settings = "1 / shortest-path length, 0 if disconnected";
      parallel_for(n, options.threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
          const auto d = bfs_distances(g, static_cast<NodeId>(i));
          for (std::size_t j = i + 1; j < n; ++j) {
            out.set(static_cast<NodeId>(i), static_cast<NodeId>(j), d[j] > 0 ? 1.0 / d[j] : 0.0);
          }
        }
      });
      break;
    case ScoreMethod::kKatz: {
      if (options.katz_max_length < 2) throw ParameterError("Katz needs l_max >= 2");
      if (!(options.katz_epsilon > 0.0)) throw ParameterError("Katz epsilon must be positive");
      out.settings = "walks, eps=" + std::to_string(options.katz_epsilon) +
                     ", l_max=" + std::to_string(options.katz_max_length);
      parallel_for(n, options.threads, [&](std::size_t lo, std::size_t hi) {
        std::vector<double> walks(n);
        std::vector<double> next(n);
        std::vector<double> score(n);
        for (std::size_t i = lo; i < hi; ++i) {
          std::fill(walks.begin(), walks.end(), 0.0);
          std::fill(score.begin(), score.end(), 0.0);
          walks[i] = 1.0;
          double weight = 1.0;
          for (int l = 1; l <= options.katz_max_length; ++l) {
            std::fill(next.begin(), next.end(), 0.0);
            for (std::size_t v = 0; v < n; ++v) {
              if (walks[v] == 0.0) continue;
              for (NodeId w : g.neighbors(static_cast<NodeId>(v))) next[w] += walks[v];
            }
            walks.swap(next);
            weight *= options.katz_epsilon;
            if (l >= 2) {
              for (std::size_t j = i + 1; j < n; ++j) score[j] += weight * walks[j];
            }
          }
          for (std::size_t j = i + 1; j < n; ++j) out.set(static_cast<NodeId>(i), static_cast<NodeId>(j), score[j]);
        }
      });
      break;
    }
  }
  return out;
}

std::string Stratum::name() const {
  switch (kind) {
    case Kind::kAll:
      return "all";
    case Kind::kNoCommonNeighbor:
      return "hard";
    case Kind::kLowDegree:
      return "low_degree<" + std::to_string(k_max);
  }
  return "unknown";
}

AucResult auc(const ScoredPairs& scored, const LinkSplit& split, const Stratum& stratum, const AucMode& mode,
              int threads) {
  check_nodes(scored, split);
  AucResult r;
  r.stratum = stratum.name();
  auto missing = missing_goodness(scored, split, stratum);
  r.missing_pairs = missing.size();

  if (mode.sampled) {
    if (mode.samples == 0) throw ParameterError("sampled AUC needs at least one draw");
    const auto& g = split.training;
    const std::size_t n = g.node_count();
    if (missing.empty() || n < 2) return r;
    RandomStream rng(mode.seed, StreamPurpose::kAucSampling, 0);
    const std::uint64_t cap = 1000 * mode.samples + 1'000'000;
    std::uint64_t attempts = 0;
    std::uint64_t drawn = 0;
    double wins = 0.0;
    while (drawn < mode.samples) {
      if (++attempts > cap) break;
      const auto a = static_cast<NodeId>(rng.below(n));
      const auto b = static_cast<NodeId>(rng.below(n));
      if (a == b || split.is_edge(a, b) || !low_degree_ok(g, stratum, a, b)) continue;
      if (stratum.kind == Stratum::Kind::kNoCommonNeighbor && common_neighbors(g, a, b) != 0) continue;
      const double miss = missing[static_cast<std::size_t>(rng.below(missing.size()))];
      const double none = scored.goodness(a, b);
      wins += miss > none ? 1.0 : (miss == none ? 0.5 : 0.0);
      ++drawn;
    }
    if (drawn == 0) return r;
    r.nonexistent_pairs = drawn;
    r.defined = true;
    r.value = wins / static_cast<double>(drawn);
    return r;
  }

  std::sort(missing.begin(), missing.end());
  struct Counts {
    std::uint64_t pairs = 0;
    std::uint64_t better = 0;  // missing strictly better than the pair
    std::uint64_t ties = 0;
  };
  std::vector<Counts> per_row(split.training.node_count());
  for_each_nonexistent(
      scored, split, stratum, threads, [&](std::size_t row, double g) {
        const auto lo = std::lower_bound(missing.begin(), missing.end(), g);
        const auto hi = std::upper_bound(lo, missing.end(), g);
        auto& c = per_row[row];
        ++c.pairs;
        c.better += static_cast<std::uint64_t>(missing.end() - hi);
        c.ties += static_cast<std::uint64_t>(hi - lo);
      });
  Counts total;
  for (const auto& c : per_row) {
    total.pairs += c.pairs;
    total.better += c.better;
    total.ties += c.ties;
  }
  r.nonexistent_pairs = total.pairs;
  if (missing.empty() || total.pairs == 0) return r;
  r.defined = true;
  r.value = (static_cast<double>(total.better) + 0.5 * static_cast<double>(total.ties)) /
            (static_cast<double>(missing.size()) * static_cast<double>(total.pairs));
  return r;
}

std::vector<RocPoint> roc_curve(const ScoredPairs& scored, const LinkSplit& split, const Stratum& stratum,
                                int threads) {
  check_nodes(scored, split);
  auto missing = missing_goodness(scored, split, stratum);
  std::vector<std::vector<double>> rows(split.training.node_count());
  for_each_nonexistent(
      scored, split, stratum, threads, [&](std::size_t row, double g) { rows[row].push_back(g); });
  std::vector<double> none;
  for (auto& r : rows) none.insert(none.end(), r.begin(), r.end());
  if (missing.empty() || none.empty()) return {};

  std::sort(missing.begin(), missing.end(), std::greater<>());
  std::sort(none.begin(), none.end(), std::greater<>());
  const double M = static_cast<double>(missing.size());
  const double N = static_cast<double>(none.size());
  std::vector<RocPoint> curve{{0.0, 0.0}};
  std::size_t im = 0;
  std::size_t in = 0;
  while (im < missing.size() || in < none.size()) {
    double threshold = -INFINITY;
    if (im < missing.size()) threshold = std::max(threshold, missing[im]);
    if (in < none.size()) threshold = std::max(threshold, none[in]);
    while (im < missing.size() && missing[im] == threshold) ++im;
    while (in < none.size() && none[in] == threshold) ++in;
    curve.push_back({static_cast<double>(in) / N, static_cast<double>(im) / M});
  }
  return curve;
}

double roc_area(const std::vector<RocPoint>& curve) {
  double area = 0.0;
  for (std::size_t k = 1; k < curve.size(); ++k) {
    area += (curve[k].fpr - curve[k - 1].fpr) * 0.5 * (curve[k].tpr + curve[k - 1].tpr);
  }
  return area;
}

}  // namespace hypermap
