#include "hypermap/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypermap/geometry.hpp"

namespace hypermap {
namespace {

double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z))); }

bool near(double a, double b) { return std::fabs(a - b) < kBetaBranchTolerance; }

}  // namespace

double radial_normalizer(double i, double beta) {
  const double a = 1.0 - beta;
  if (a == 0.0) return std::log(i);
  // -expm1 keeps full precision when (1 - beta) ln i is small
  return -std::expm1(-a * std::log(i)) / a;
}

double temperature_prefactor(double T) {
  if (!(T >= 0.0)) throw ParameterError("temperature must be >= 0");
  if (T >= 1.0) throw ParameterError("connection radius requires T < 1");
  if (T == 0.0) return 2.0 / std::numbers::pi;
  return 2.0 * T / std::sin(T * std::numbers::pi);
}

double connection_radius(double i, const ModelParams& params, double mbar_i) {
  if (!(i > 1.0)) throw ParameterError("connection_radius: birth index must be > 1");
  if (!(mbar_i > 0.0)) throw ParameterError("connection_radius: expected links must be > 0");
  const double I_i = radial_normalizer(i, params.beta());
  return radial_coordinate(i, params.zeta) -
         2.0 / params.zeta * std::log(temperature_prefactor(params.T) * I_i / mbar_i);
}

double connection_probability(double x, double R, double T, double zeta) {
  if (T == 0.0) return x <= R ? 1.0 : 0.0;
  const double z = zeta / (2.0 * T) * (x - R);
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

LogProbabilities log_connection_probability(double x, double R, double T, double zeta) {
  if (T == 0.0) {
    if (x <= R) return {0.0, kLogProbabilityFloor};
    return {kLogProbabilityFloor, 0.0};
  }
  const double z = zeta / (2.0 * T) * (x - R);
  return {std::max(-softplus(z), kLogProbabilityFloor), std::max(-softplus(-z), kLogProbabilityFloor)};
}

double expected_internal_links(double i, const ModelParams& params) {
  const double t = static_cast<double>(params.t);
  if (params.L == 0.0 || i >= t) return 0.0;
  const double beta = params.beta();
  const double L = params.L;
  if (near(beta, 0.5)) {
    const double d = 1.0 - std::pow(t, -0.5);
    return L * (1.0 - std::pow(i, -0.5)) / (d * d) * std::log(t / i);
  }
  if (near(beta, 1.0)) {
    const double lt = std::log(t);
    return 2.0 * L * (t - i) * std::log(i) / (i * lt * lt);
  }
  const double a = 1.0 - beta;
  const double b = 2.0 * beta - 1.0;
  const double d = -std::expm1(-a * std::log(t));
  const double growth = std::expm1(b * std::log(t / i)) / b;
  const double older = -std::expm1(-a * std::log(i));
  return 2.0 * L * a / (d * d) * growth * older;
}

double expected_initial_links(double i, const ModelParams& params) {
  return params.m + expected_internal_links(i, params);
}

double radial_density(double r, const ModelParams& params) {
  const double k = params.zeta / (2.0 * params.beta());
  const double r_t = radial_coordinate(static_cast<double>(params.t), params.zeta);
  return k * std::exp(k * (r - r_t));
}

double expected_degree(double i, const ModelParams& params) {
  const double t = static_cast<double>(params.t);
  const double beta = params.beta();
  const double x = i / t;
  const double I_t = radial_normalizer(t, beta);
  const double mbar = expected_initial_links(i, params);
  if (i >= t) return mbar;

  const double external = params.m / (I_t * beta) * (std::pow(x, -beta) - 1.0);
  const double scale = 2.0 * params.L / (I_t * I_t);
  double internal = 0.0;
  if (params.L == 0.0) {
    internal = 0.0;
  } else if (near(beta, 0.5)) {
    internal = scale * (4.0 / std::sqrt(x) + 2.0 * std::log(x) - 4.0);
  } else if (near(beta, 1.0)) {
    internal = scale * (1.0 - (1.0 + std::log(x)) / x);
  } else {
    const double a = 1.0 - beta;
    const double b = 2.0 * beta - 1.0;
    internal = scale / b * (b / (beta * a) * std::pow(x, -beta) - std::pow(x, 1.0 - 2.0 * beta) / a + 1.0 / beta);
  }
  return mbar + external + internal;
}

std::vector<DegreePoint> expected_degree_curve(const ModelParams& params) {
  params.validate();
  std::vector<DegreePoint> curve;
  curve.reserve(static_cast<std::size_t>(params.t));
  for (std::int64_t i = 1; i <= params.t; ++i) {
    curve.push_back({i, expected_degree(static_cast<double>(i), params)});
  }
  return curve;
}

double expected_average_degree(const ModelParams& params) {
  double sum = 0.0;
  for (std::int64_t i = 2; i <= params.t; ++i) {
    sum += std::min(expected_initial_links(static_cast<double>(i), params), static_cast<double>(i - 1));
  }
  return 2.0 * sum / static_cast<double>(params.t);
}

}  // namespace hypermap
