#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hypermap/embedding.hpp"
#include "hypermap/graph.hpp"

namespace hypermap {

/// Training/probe partition of a network's edges. The nonexistent-pair
/// universe is implicit: every unordered pair that is in neither set.
struct LinkSplit {
  AdjacencySnapshot training;
  std::vector<Edge> probe;  // sorted, first < second
  double fraction = 0.0;
  std::uint64_t seed = 0;

  bool is_probe(NodeId a, NodeId b) const { return probe_index.contains(pair_key(a, b)); }
  /// True for pairs linked in the original network.
  bool is_edge(NodeId a, NodeId b) const { return training.has_edge(a, b) || is_probe(a, b); }

  std::unordered_set<std::uint64_t> probe_index;
};

/// Moves round(p |E|) uniformly chosen edges into the probe set.
LinkSplit split(const AdjacencySnapshot& net, double p, std::uint64_t seed);

/// Builds a split from an explicit probe set (each must be an edge of net).
LinkSplit split_from_probe(const AdjacencySnapshot& net, const std::vector<Edge>& probe);

/// Subgraph induced by nodes with degree > k_min, labels kept.
AdjacencySnapshot filter_min_degree(const AdjacencySnapshot& net, std::int64_t k_min);

enum class Orientation { kSmallerBetter, kLargerBetter };

enum class ScoreMethod { kHyperbolic, kCommonNeighbors, kDegreeProduct, kInverseShortestPath, kKatz };

std::string to_string(ScoreMethod m);
ScoreMethod parse_score_method(const std::string& name);

struct BaselineOptions {
  double katz_epsilon = 0.005;
  int katz_max_length = 6;
  int threads = 1;
};

/// Scores for every unordered pair, stored as a dense upper triangle.
class ScoredPairs {
 public:
  ScoredPairs(std::string name, Orientation orientation, std::size_t n);

  const std::string& name() const { return name_; }
  Orientation orientation() const { return orientation_; }
  std::size_t node_count() const { return n_; }
  /// Free-form description of scorer settings.
  std::string settings;

  double score(NodeId a, NodeId b) const { return values_[index(a, b)]; }
  void set(NodeId a, NodeId b, double v) { values_[index(a, b)] = v; }
  /// Score mapped so that larger always means more likely missing.
  double goodness(NodeId a, NodeId b) const {
    const double s = score(a, b);
    return orientation_ == Orientation::kLargerBetter ? s : -s;
  }

 private:
  std::size_t index(NodeId a, NodeId b) const {
    if (a > b) std::swap(a, b);
    const std::size_t i = a;
    return i * (2 * n_ - i - 1) / 2 + (b - i - 1);
  }

  std::string name_;
  Orientation orientation_;
  std::size_t n_;
  std::vector<double> values_;
};

/// Hyperbolic distance in an embedding of the training graph.
ScoredPairs score_hyperbolic(const LinkSplit& split, const Embedding& training_embedding, int threads = 1);

/// Common neighbors, degree product, inverse shortest path, or truncated
/// Katz (sum over walk lengths 2..l_max of eps^l times walk counts).
ScoredPairs score_baseline(const LinkSplit& split, ScoreMethod method, const BaselineOptions& options = {});

/// Which pairs take part in an AUC evaluation.
struct Stratum {
  enum class Kind { kAll, kNoCommonNeighbor, kLowDegree };
  Kind kind = Kind::kAll;
  std::int64_t k_max = 0;  // kLowDegree: both training degrees < k_max

  static Stratum all() { return {}; }
  static Stratum hard() { return {Kind::kNoCommonNeighbor, 0}; }
  static Stratum low_degree(std::int64_t k_max) { return {Kind::kLowDegree, k_max}; }
  std::string name() const;
};

struct AucMode {
  bool sampled = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static AucMode exact() { return {}; }
  static AucMode sample(std::uint64_t n, std::uint64_t seed) { return {true, n, seed}; }
};

struct AucResult {
  bool defined = false;  // false when either pair set is empty
  double value = 0.0;
  std::uint64_t missing_pairs = 0;
  std::uint64_t nonexistent_pairs = 0;
  std::string stratum;
};

AucResult auc(const ScoredPairs& scored, const LinkSplit& split, const Stratum& stratum = Stratum::all(),
              const AucMode& mode = AucMode::exact(), int threads = 1);

struct RocPoint {
  double fpr;
  double tpr;
};

/// Threshold sweep over every distinct score, from (0,0) to (1,1).
/// Empty when the AUC would be undefined.
std::vector<RocPoint> roc_curve(const ScoredPairs& scored, const LinkSplit& split,
                                const Stratum& stratum = Stratum::all(), int threads = 1);

/// Trapezoidal area under a ROC curve.
double roc_area(const std::vector<RocPoint>& curve);

}  // namespace hypermap
