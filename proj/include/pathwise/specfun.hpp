#pragma once

namespace pathwise::specfun {

// Result of a series / continued-fraction evaluation.  `converged` is false
// when the iteration cap was reached; callers decide whether that is fatal.
struct SpecFunResult {
  double value = 0.0;
  bool converged = false;
  int terms_used = 0;
};

// ln Gamma(x), x > 0.
double log_gamma(double x);

// psi(x) = d/dx ln Gamma(x), x > 0.
double digamma(double x);

// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a+b).
double log_beta(double a, double b);

// Regularized lower incomplete gamma P(alpha, z), alpha > 0, z >= 0.
// Series for z < alpha + 1, continued fraction otherwise.
SpecFunResult reg_inc_gamma_ex(double alpha, double z);
double reg_inc_gamma(double alpha, double z);

// Regularized incomplete beta I_z(alpha, beta), z in [0, 1].
SpecFunResult reg_inc_beta_ex(double alpha, double beta, double z);
double reg_inc_beta(double alpha, double beta, double z);

// Unit normal density / CDF / quantile.
double std_normal_pdf(double x);
double std_normal_cdf(double x);
double std_normal_quantile(double p);

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

}  // namespace pathwise::specfun
