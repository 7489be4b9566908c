#pragma once

#include <cstdint>
#include <vector>

namespace hypermap {

/// A sum of pairwise log-likelihood terms as a function of one node's angle.
///
/// Term j contributes log p (linked) or log(1 - p) (not linked), where
/// p = 1 / (1 + exp((acosh(u_j) - offset_j) / 2T)) and
/// u_j = base_j + scale_j * sin^2(sep/2), sep being the angular separation
/// between the free angle and theta_j. With base = cosh(z(ra - rb)),
/// scale = 2 sinh(z ra) sinh(z rb) and offset = zeta R this is exactly the
/// logistic connection probability at hyperbolic distance x = acosh(u)/zeta.
///
/// Every term is monotone in the separation, which gives cheap upper bounds
/// over angular intervals.
class AngularObjective {
 public:
  explicit AngularObjective(double T) : T_(T) {}

  void clear();
  void reserve(std::size_t n);
  void add(double theta, double base, double scale, double offset, bool linked);
  std::size_t size() const { return theta_.size(); }
  double temperature() const { return T_; }

  /// Objective at the given angle.
  double value(double theta) const;

  /// Upper bound of value() over [center - half_width, center + half_width].
  double upper_bound(double center, double half_width) const;

 private:
  double T_;
  std::vector<double> theta_;
  std::vector<double> base_;
  std::vector<double> scale_;
  std::vector<double> offset_;
  std::vector<double> sign_;  // +1 linked, -1 not linked
};

enum class GridSearch {
  kExhaustive,      // evaluate every grid point
  kBranchAndBound,  // exact argmax with interval bounds
};

struct GridMaximum {
  std::int64_t index = 0;  // grid point k, angle 2 pi k / grid_size
  double theta = 0.0;
  double value = 0.0;
  std::int64_t evaluations = 0;  // point and bound evaluations
};

/// Angle of grid point k out of n.
double grid_angle(std::int64_t k, std::int64_t n);

/// Argmax of the objective over n equally spaced angles; ties go to the
/// smallest angle. Both search modes return the same point.
GridMaximum maximize_on_grid(const AngularObjective& objective, std::int64_t n,
                             GridSearch search = GridSearch::kBranchAndBound, int threads = 1);

}  // namespace hypermap
