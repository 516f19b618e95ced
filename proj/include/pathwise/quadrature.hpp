#pragma once

#include <functional>

namespace pathwise::oracle {

enum class QuadScheme { gauss_kronrod, adaptive_simpson };

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Adaptive quadrature of f over the finite interval [a, b] to absolute
// tolerance abs_tol.  Two independent rules are provided so results can be
// cross-checked.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, QuadScheme scheme);

}  // namespace pathwise::oracle
