#pragma once

#include <vector>

#include "hypermap/params.hpp"

namespace hypermap {

/// log(1e-300): floor applied to every log-probability term.
inline constexpr double kLogProbabilityFloor = -690.77552789821368;

/// Branch tolerance used to pick the beta -> 1/2 and beta -> 1 limits.
inline constexpr double kBetaBranchTolerance = 1e-9;

/// I_i = (1 - i^-(1-beta)) / (1 - beta), with the beta = 1 limit ln i.
double radial_normalizer(double i, double beta);

/// 2T / sin(T pi), or its T -> 0 limit 2/pi. Throws for T >= 1 or T < 0.
double temperature_prefactor(double T);

/// R_i = r_i - (2/zeta) ln[(2T/sin(T pi)) I_i / mbar_i].
double connection_radius(double i, const ModelParams& params, double mbar_i);

/// 1 / (1 + exp((zeta/2T)(x - R))); a step function at T = 0.
double connection_probability(double x, double R, double T, double zeta);

struct LogProbabilities {
  double log_p;
  double log_q;  // log(1 - p)
};

/// log p and log(1 - p) evaluated from the logistic exponent without
/// forming p, each floored at kLogProbabilityFloor.
LogProbabilities log_connection_probability(double x, double R, double T, double zeta);

/// Expected internal links between node i and older nodes by time t.
double expected_internal_links(double i, const ModelParams& params);

/// mbar_i(t) = m + Lbar_i(t).
double expected_initial_links(double i, const ModelParams& params);

/// Density of the radial coordinate at the final time t.
double radial_density(double r, const ModelParams& params);

/// Closed-form expected degree kbar_i(t) = mbar_i(t) + int_i^t Pi(i, l, t) dl.
double expected_degree(double i, const ModelParams& params);

struct DegreePoint {
  std::int64_t i;
  double degree;
};

/// kbar_i(t) for every birth index 1..t.
std::vector<DegreePoint> expected_degree_curve(const ModelParams& params);

/// Average degree implied by the model at finite t.
double expected_average_degree(const ModelParams& params);

}  // namespace hypermap
