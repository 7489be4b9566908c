// Hot loops of AngularObjective. This file may be compiled with
// -ffast-math (see src/CMakeLists.txt); nothing here relies on inf or NaN.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypermap/angular_objective.hpp"
#include "hypermap/model.hpp"

namespace hypermap {
namespace {

constexpr double kPi = std::numbers::pi;

inline double separation(double a, double b) { return kPi - std::fabs(kPi - std::fabs(a - b)); }

// log p or log(1 - p) for a term at separation sep, T > 0.
inline double smooth_term(double sep, double base, double scale, double offset, double sign, double inv2T) {
  const double s = std::sin(0.5 * sep);
  const double u = std::max(base + scale * s * s, 1.0);
  const double ax = std::log(u + std::sqrt(u * u - 1.0));
  const double z = sign * (ax - offset) * inv2T;
  const double term = -(std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z))));
  return std::max(term, kLogProbabilityFloor);
}

// T = 0: connected iff x <= R.
inline double step_term(double sep, double base, double scale, double offset, double sign) {
  const double s = std::sin(0.5 * sep);
  const double u = std::max(base + scale * s * s, 1.0);
  const double ax = std::log(u + std::sqrt(u * u - 1.0));
  const bool within = ax <= offset;
  const bool linked = sign > 0.0;
  return within == linked ? 0.0 : kLogProbabilityFloor;
}

}  // namespace

double AngularObjective::value(double theta) const {
  const std::size_t n = theta_.size();
  const double* th = theta_.data();
  const double* ba = base_.data();
  const double* sc = scale_.data();
  const double* of = offset_.data();
  const double* sg = sign_.data();
  double acc = 0.0;
  if (T_ == 0.0) {
    for (std::size_t j = 0; j < n; ++j) acc += step_term(separation(theta, th[j]), ba[j], sc[j], of[j], sg[j]);
    return acc;
  }
  const double inv2T = 0.5 / T_;
  for (std::size_t j = 0; j < n; ++j) {
    acc += smooth_term(separation(theta, th[j]), ba[j], sc[j], of[j], sg[j], inv2T);
  }
  return acc;
}

double AngularObjective::upper_bound(double center, double half_width) const {
  const std::size_t n = theta_.size();
  const double* th = theta_.data();
  const double* ba = base_.data();
  const double* sc = scale_.data();
  const double* of = offset_.data();
  const double* sg = sign_.data();
  double acc = 0.0;
  // linked terms peak at the closest point, unlinked ones at the farthest
  if (T_ == 0.0) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = separation(center, th[j]);
      const double sep = sg[j] > 0.0 ? std::max(d - half_width, 0.0) : std::min(d + half_width, kPi);
      acc += step_term(sep, ba[j], sc[j], of[j], sg[j]);
    }
    return acc;
  }
  const double inv2T = 0.5 / T_;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = separation(center, th[j]);
    const double sep = sg[j] > 0.0 ? std::max(d - half_width, 0.0) : std::min(d + half_width, kPi);
    acc += smooth_term(sep, ba[j], sc[j], of[j], sg[j], inv2T);
  }
  return acc;
}

}  // namespace hypermap
