#pragma once

#include <vector>

#include "hypermap/params.hpp"

namespace hypermap {

/// Which form of the global connection probability to evaluate.
enum class GlobalProbability {
  kExactSum,   // average over birth times i_min..t
  kFirstTerm,  // 1 / (1 + exp((zeta/2T)(x - R_t)))
};

/// Precomputed quantities behind the global connection probability of a
/// network grown to t nodes.
class LikelihoodContext {
 public:
  explicit LikelihoodContext(const ModelParams& params);

  const ModelParams& params() const { return params_; }
  double connection_radius_final() const { return R_t_; }
  /// Delta_i(t) for 2 <= i <= t.
  double delta(std::int64_t i) const { return delta_[static_cast<std::size_t>(i)]; }
  /// Taylor constant A; NaN at beta = 1/2 where it is undefined.
  double taylor_constant() const { return A_; }
  /// Smallest birth time that can produce distance x at time t.
  std::int64_t min_birth_index(double x) const;

  /// Probability that two random nodes at final-time distance x are linked.
  double global_connection_probability(double x,
                                       GlobalProbability form = GlobalProbability::kExactSum) const;

 private:
  ModelParams params_;
  double R_t_ = 0.0;
  double A_ = 0.0;
  std::vector<double> delta_;
};

}  // namespace hypermap
