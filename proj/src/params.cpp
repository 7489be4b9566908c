#include "hypermap/params.hpp"

#include <cmath>
#include <sstream>

namespace hypermap {

void ModelParams::validate() const {
  auto fail = [](const std::string& what) { throw ParameterError("invalid model parameter: " + what); };
  if (!std::isfinite(m) || m <= 0.0) fail("m must be > 0");
  if (!std::isfinite(L) || L < 0.0) fail("L must be >= 0");
  if (!std::isfinite(gamma) || gamma < 2.0) fail("gamma must be >= 2");
  if (!std::isfinite(T) || T < 0.0) fail("T must be >= 0");
  if (!std::isfinite(zeta) || zeta <= 0.0) fail("zeta must be > 0");
  if (t < 1) fail("t must be >= 1");
}

std::string ModelParams::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "m=" << m << " L=" << L << " gamma=" << gamma << " T=" << T << " zeta=" << zeta << " t=" << t;
  return os.str();
}

}  // namespace hypermap
