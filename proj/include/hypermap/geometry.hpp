#pragma once

#include <numbers>

namespace hypermap {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;
};

/// Wraps an angle into [0, 2pi).
double normalize_angle(double theta);

/// Angular separation in [0, pi]: pi - |pi - |a - b||.
double angular_separation(double a, double b);

/// (2/zeta) ln i. Real-valued i >= 1 is accepted.
double radial_coordinate(double i, double zeta);

/// beta * r_initial + (1 - beta) * r_rim.
double drifted_radius(double r_initial, double r_rim, double beta);

/// Argument of arccosh for two points, clamped to >= 1.
///
/// Evaluated as cosh(z(ra - rb)) + 2 sinh(z ra) sinh(z rb) sin^2(dtheta/2),
/// which equals cosh(z ra)cosh(z rb) - sinh(z ra)sinh(z rb)cos(dtheta) but
/// does not cancel catastrophically for nearby points.
double cosh_distance_argument(double ra, double rb, double dtheta, double zeta);

/// Exact hyperbolic distance between two points in the native
/// representation of curvature -zeta^2.
double hyperbolic_distance(const PolarPoint& a, const PolarPoint& b, double zeta);

/// ra + rb + (2/zeta) ln(dtheta/2). Exposed for testing only.
double hyperbolic_distance_approx(const PolarPoint& a, const PolarPoint& b, double zeta);

}  // namespace hypermap
