#include "hypermap/embedding.hpp"

#include "hypermap/params.hpp"

namespace hypermap {

double Embedding::distance(NodeId a, NodeId b) const {
  return hyperbolic_distance(point(a), point(b), params.zeta);
}

double final_radius_for_rank(std::int64_t rank, const ModelParams& params) {
  if (rank < 1 || rank > params.t) throw ParameterError("rank out of range");
  const double r_i = radial_coordinate(static_cast<double>(rank), params.zeta);
  const double r_t = radial_coordinate(static_cast<double>(params.t), params.zeta);
  return drifted_radius(r_i, r_t, params.beta());
}

}  // namespace hypermap
