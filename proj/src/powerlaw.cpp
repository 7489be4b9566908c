#include "hypermap/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "hypermap/params.hpp"

namespace hypermap {

std::string PowerLawFit::describe() const {
  std::ostringstream os;
  os.precision(6);
  os << "discrete MLE tail fit: gamma=" << gamma << " k_min=" << k_min << " n_tail=" << tail_size
     << " ks=" << ks_distance;
  return os.str();
}

PowerLawFit fit_power_law_tail(std::span<const std::int64_t> values, std::size_t min_tail) {
  std::vector<std::int64_t> k;
  k.reserve(values.size());
  for (auto v : values) {
    if (v > 0) k.push_back(v);
  }
  if (k.size() < std::max<std::size_t>(min_tail, 2)) throw ParameterError("power-law fit: too few positive values");
  std::sort(k.begin(), k.end());

  PowerLawFit best;
  best.ks_distance = INFINITY;
  const std::size_t n_all = k.size();
  // suffix sums of ln k make each candidate O(distinct tail values)
  std::vector<double> log_suffix(n_all + 1, 0.0);
  for (std::size_t i = n_all; i-- > 0;) log_suffix[i] = log_suffix[i + 1] + std::log(static_cast<double>(k[i]));

  for (std::size_t start = 0; start < n_all;) {
    const std::int64_t kmin = k[start];
    const std::size_t n = n_all - start;
    if (n < min_tail) break;
    const double shift = static_cast<double>(kmin) - 0.5;
    const double denom = log_suffix[start] - static_cast<double>(n) * std::log(shift);
    std::size_t next = start;
    while (next < n_all && k[next] == kmin) ++next;
    if (denom <= 0.0) {
      start = next;
      continue;
    }
    const double alpha = 1.0 + static_cast<double>(n) / denom;

    // KS distance between empirical and model survival functions
    double ks = 0.0;
    for (std::size_t i = start; i < n_all;) {
      const std::int64_t kv = k[i];
      const double empirical = static_cast<double>(n_all - i) / static_cast<double>(n);
      const double model = std::pow((static_cast<double>(kv) - 0.5) / shift, 1.0 - alpha);
      ks = std::max(ks, std::fabs(empirical - model));
      while (i < n_all && k[i] == kv) ++i;
    }
    if (ks < best.ks_distance) {
      best = {alpha, kmin, n, ks};
    }
    start = next;
  }
  if (!std::isfinite(best.ks_distance)) throw ParameterError("power-law fit: no admissible k_min");
  return best;
}

}  // namespace hypermap
