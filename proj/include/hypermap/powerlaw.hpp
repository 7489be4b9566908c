#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace hypermap {

struct PowerLawFit {
  double gamma = 0.0;
  std::int64_t k_min = 1;
  std::size_t tail_size = 0;
  double ks_distance = 0.0;

  std::string describe() const;
};

/// Maximum-likelihood fit of P(k) ~ k^-gamma to the tail k >= k_min, using
/// the discrete approximation gamma = 1 + n / sum ln(k / (k_min - 1/2)).
/// k_min is chosen among observed degrees to minimize the KS distance
/// between empirical and fitted tail distributions, keeping at least
/// min_tail samples. Throws when fewer than min_tail positive values exist.
PowerLawFit fit_power_law_tail(std::span<const std::int64_t> values, std::size_t min_tail = 50);

}  // namespace hypermap
