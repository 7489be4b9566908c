#include "hypermap/likelihood_context.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypermap/model.hpp"

namespace hypermap {

LikelihoodContext::LikelihoodContext(const ModelParams& params) : params_(params) {
  params_.validate();
  const std::int64_t t = params_.t;
  const double beta = params_.beta();
  const double td = static_cast<double>(t);

  if (std::fabs(beta - 0.5) < kBetaBranchTolerance) {
    A_ = std::numeric_limits<double>::quiet_NaN();
  } else if (std::fabs(beta - 1.0) < kBetaBranchTolerance) {
    A_ = 2.0 * params_.L / (params_.m * std::log(td));
  } else {
    const double a = 1.0 - beta;
    A_ = 2.0 * params_.L * a / (params_.m * (2.0 * beta - 1.0) * -std::expm1(-a * std::log(td)));
  }

  if (t < 2) return;
  R_t_ = connection_radius(td, params_, expected_initial_links(td, params_));

  delta_.assign(static_cast<std::size_t>(t) + 1, 0.0);
  const double log_I_t = std::log(radial_normalizer(td, beta));
  const double log_m = std::log(params_.m);
  for (std::int64_t i = 2; i <= t; ++i) {
    const double id = static_cast<double>(i);
    const double v = (2.0 * beta - 1.0) * std::log(td / id) + log_m + std::log(radial_normalizer(id, beta)) -
                     std::log(expected_initial_links(id, params_)) - log_I_t;
    delta_[static_cast<std::size_t>(i)] = 2.0 / params_.zeta * v;
  }
}

std::int64_t LikelihoodContext::min_birth_index(double x) const {
  const std::int64_t t = params_.t;
  const double beta = params_.beta();
  if (x <= 0.0) return t;
  if (std::fabs(1.0 - beta) < kBetaBranchTolerance) return std::min<std::int64_t>(2, t);
  const double v = std::ceil(static_cast<double>(t) * std::exp(-params_.zeta * x / (4.0 * (1.0 - beta))));
  return std::clamp<std::int64_t>(static_cast<std::int64_t>(v), 2, std::max<std::int64_t>(t, 2));
}

double LikelihoodContext::global_connection_probability(double x, GlobalProbability form) const {
  if (params_.t < 2) return 0.0;
  if (form == GlobalProbability::kFirstTerm) {
    return connection_probability(x, R_t_, params_.T, params_.zeta);
  }
  const std::int64_t lo = min_birth_index(x);
  double sum = 0.0;
  for (std::int64_t i = lo; i <= params_.t; ++i) {
    sum += connection_probability(x + delta_[static_cast<std::size_t>(i)], R_t_, params_.T, params_.zeta);
  }
  return sum / static_cast<double>(params_.t - lo + 1);
}

}  // namespace hypermap
