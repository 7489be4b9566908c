#include "hypermap/geometry.hpp"

#include <cmath>

#include "hypermap/params.hpp"

namespace hypermap {

double normalize_angle(double theta) {
  double w = std::fmod(theta, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double angular_separation(double a, double b) {
  return std::numbers::pi - std::fabs(std::numbers::pi - std::fabs(a - b));
}

double radial_coordinate(double i, double zeta) {
  if (!(i >= 1.0)) throw ParameterError("radial_coordinate: birth index must be >= 1");
  return 2.0 / zeta * std::log(i);
}

double drifted_radius(double r_initial, double r_rim, double beta) {
  return beta * r_initial + (1.0 - beta) * r_rim;
}

double cosh_distance_argument(double ra, double rb, double dtheta, double zeta) {
  const double s = std::sin(0.5 * dtheta);
  const double u = std::cosh(zeta * (ra - rb)) + 2.0 * std::sinh(zeta * ra) * std::sinh(zeta * rb) * s * s;
  return u < 1.0 ? 1.0 : u;
}

double hyperbolic_distance(const PolarPoint& a, const PolarPoint& b, double zeta) {
  const double dtheta = angular_separation(a.theta, b.theta);
  return std::acosh(cosh_distance_argument(a.r, b.r, dtheta, zeta)) / zeta;
}

double hyperbolic_distance_approx(const PolarPoint& a, const PolarPoint& b, double zeta) {
  const double dtheta = angular_separation(a.theta, b.theta);
  return a.r + b.r + 2.0 / zeta * std::log(0.5 * dtheta);
}

}  // namespace hypermap
