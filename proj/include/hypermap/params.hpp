#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypermap {

/// Thrown for any invalid model or option value.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The five growth-model parameters plus the final network size.
struct ModelParams {
  double m = 1.5;      // expected external links per new node
  double L = 0.0;      // internal-link rate
  double gamma = 2.1;  // power-law exponent, beta = 1/(gamma-1)
  double T = 0.4;      // temperature
  double zeta = 1.0;   // sqrt(-K)
  std::int64_t t = 1;  // final node count

  double beta() const { return 1.0 / (gamma - 1.0); }

  /// Throws ParameterError when any invariant fails.
  void validate() const;

  std::string to_string() const;
};

}  // namespace hypermap
