#pragma once

#include "pathwise/distribution.hpp"
#include "pathwise/quadrature.hpp"

namespace pathwise::oracle {

struct OracleConfig {
  double quadrature_abs_tol = 1e-12;  // relative, applied to the tail integral
  double fd_base_step = 1e-4;         // relative step, scaled by max(|theta|,1)
  int richardson_levels = 4;          // in [2, 8]

  void validate() const;
};

struct OracleResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool ok = false;
};

// High-precision CDF by adaptive quadrature of the density.  Endpoint
// singularities declared via ScalarDistribution::endpoint_exponent are removed
// by a power substitution evaluated in log space; infinite tails are mapped to
// (0,1).
double oracle_cdf(const ScalarDistribution& dist, double z,
                  const OracleConfig& cfg = {},
                  QuadScheme scheme = QuadScheme::gauss_kronrod);

// dF/dtheta_i at fixed z, by central differences of the quadrature CDF with
// Richardson extrapolation.  `ok` is false when the extrapolation table fails
// to contract beyond the estimated noise floor.
OracleResult oracle_dcdf_dtheta(const ScalarDistribution& dist, double z,
                                int theta_index, const OracleConfig& cfg = {},
                                QuadScheme scheme = QuadScheme::gauss_kronrod);

// Pathwise derivative ground truth: -dF/dtheta_i / pdf(z).
OracleResult oracle_dz_dtheta(const ScalarDistribution& dist, double z,
                              int theta_index, const OracleConfig& cfg = {},
                              QuadScheme scheme = QuadScheme::gauss_kronrod);

// Evaluates oracle_dz_dtheta under both quadrature schemes and reports their
// disagreement; `ok` additionally requires the two schemes to agree to
// cross_tol (relative).
struct DualOracleResult {
  double value = 0.0;
  double cross_delta = 0.0;
  bool ok = false;
};
DualOracleResult oracle_dz_dtheta_dual(const ScalarDistribution& dist,
                                       double z, int theta_index,
                                       const OracleConfig& cfg = {},
                                       double cross_tol = 1e-6);

}  // namespace pathwise::oracle
