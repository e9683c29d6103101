#pragma once

#include <cmath>
#include <cstdint>

#include "modelcore/model.hpp"

namespace modelcore {

// Continuous facility location on the (n+1)x(n+1) unit grid with n
// facilities. Cones r >= ||s|| go through the SOC bridge, which is
// registered on the model if it has none.
struct FacConfig {
  int n = 1;
  double big_m = 2.0 * std::sqrt(2.0);
};

// Linear-quadratic control of the 1-D heat equation on an n x n
// time/space grid (Crank-Nicolson), with a quadratic tracking objective.
struct LqcpConfig {
  int n = 2;
  double alpha = 0.001;
};

// Closed-form sizes of the generated models.
ModelCounts fac_counts(std::int64_t n);
ModelCounts lqcp_counts(std::int64_t n);

// Both require an empty model; throw ValidationError otherwise or for n out
// of range (fac: n >= 1, lqcp: n >= 2).
void gen_fac(Model& model, const FacConfig& config);
void gen_lqcp(Model& model, const LqcpConfig& config);

}  // namespace modelcore
