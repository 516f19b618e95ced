#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "pathwise/rng.hpp"

namespace pathwise {

struct Support {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

enum class Side { lower, upper };

class SingularDensityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameterized univariate distribution.  The mandatory surface is the
// parameter vector, the support, and the log density; everything else is an
// optional capability that concrete families opt into.
class ScalarDistribution {
 public:
  virtual ~ScalarDistribution() = default;

  virtual std::string name() const = 0;
  virtual int num_params() const = 0;
  virtual double param(int i) const = 0;
  virtual std::unique_ptr<ScalarDistribution> with_param(int i,
                                                         double value) const = 0;
  // lower bound of the admissible range for parameter i (used to keep
  // finite-difference stencils inside the domain)
  virtual double param_lower_bound(int) const {
    return -std::numeric_limits<double>::infinity();
  }

  virtual Support support() const = 0;
  virtual double log_pdf(double z) const = 0;
  double pdf(double z) const { return std::exp(log_pdf(z)); }

  // location / scale hints for integration maps and step sizes
  virtual double mean() const = 0;
  virtual double scale_hint() const { return 1.0; }

  // Near a finite endpoint e the density behaves like |z - e|^p * g(z) with g
  // regular; p is the endpoint exponent.  log_pdf_regular evaluates
  // log g given log|z - e| so that the regular part stays computable when
  // |z - e| underflows.
  virtual double endpoint_exponent(Side) const { return 0.0; }
  virtual double log_pdf_regular(Side side, double log_offset) const {
    const Support s = support();
    const double e = side == Side::lower ? s.lo : s.hi;
    const double off = std::exp(log_offset);
    const double z = side == Side::lower ? e + off : e - off;
    return log_pdf(z) - endpoint_exponent(side) * log_offset;
  }

  // --- optional capabilities -------------------------------------------

  virtual bool has_cdf() const { return false; }
  virtual double cdf(double) const {
    throw std::logic_error(name() + ": cdf not available");
  }

  // d/dtheta_i F_theta(z); analytic or approximation-backed
  virtual bool has_dcdf_dtheta() const { return false; }
  virtual double dcdf_dtheta(double, int) const {
    throw std::logic_error(name() + ": dcdf_dtheta not available");
  }

  // d/dtheta_i log q_theta(z) (score)
  virtual bool has_score() const { return false; }
  virtual double dlogq_dtheta(double, int) const {
    throw std::logic_error(name() + ": score not available");
  }

  // inverse CDF; default inverts cdf() numerically
  virtual double quantile(double u) const;

  // draw one sample; default pushes a uniform through quantile()
  virtual double sample(RngStream& rng) const { return quantile(rng.uniform()); }
};

// -(dF/dtheta_i)(z) / q(z); throws SingularDensityError when q(z) vanishes.
double master_formula_dz_dtheta(const ScalarDistribution& dist, double z,
                                int theta_index);

// Numerically invert a monotone CDF by safeguarded Newton.  `init` is the
// starting point (clamped into the bracket).
double invert_cdf(const ScalarDistribution& dist, double u, double init);

}  // namespace pathwise
