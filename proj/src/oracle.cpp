#include "pathwise/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace pathwise::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Integral of the density over one side interval, integrated in a coordinate
// where the integrand is regular.  Returns the integral of pdf over
// [lo, z] (side == lower) or [z, hi] (side == upper).
double tail_integral(const ScalarDistribution& dist, double z,
                     const OracleConfig& cfg, QuadScheme scheme, Side side) {
  const Support s = dist.support();
  const double endpoint = side == Side::lower ? s.lo : s.hi;

  std::function<double(double)> integrand;
  double log_prefactor = 0.0;

  if (std::isfinite(endpoint)) {
    const double width = side == Side::lower ? z - s.lo : s.hi - z;
    if (width <= 0.0) return 0.0;
    const double p = dist.endpoint_exponent(side);
    if (p != 0.0) {
      // t = endpoint -+ width * w^{1/(1+p)}; the w-power in the Jacobian
      // cancels the |t - endpoint|^p factor of the density exactly, so only
      // the regular part is evaluated (in log space, to survive underflow of
      // t - endpoint itself).
      const double q = 1.0 / (1.0 + p);
      const double log_width = std::log(width);
      log_prefactor = (1.0 + p) * log_width - std::log1p(p);
      integrand = [&dist, side, q, log_width](double w) {
        if (w <= 0.0) w = 1e-320;
        return dist.log_pdf_regular(side, log_width + q * std::log(w));
      };
    } else {
      log_prefactor = std::log(width);
      const double a = side == Side::lower ? s.lo : z;
      integrand = [&dist, a, width](double w) {
        return dist.log_pdf(a + w * width);
      };
    }
  } else {
    // map the infinite side to (0,1): t = z -+ scale * u/(1-u)
    const double scale = std::max(dist.scale_hint(), 1e-30);
    const double sign = side == Side::lower ? -1.0 : 1.0;
    log_prefactor = std::log(scale);
    integrand = [&dist, z, scale, sign](double u) {
      if (u >= 1.0 - 1e-14) return -kInf;
      const double r = u / (1.0 - u);
      const double t = z + sign * scale * r;
      if (!std::isfinite(t)) return -kInf;
      const double lp = dist.log_pdf(t) - 2.0 * std::log1p(-u);
      return lp;
    };
  }

  // Integrate exp(integrand - shift) where shift keeps values near O(1).
  double shift = -kInf;
  for (double w : {1e-6, 1e-3, 0.05, 0.25, 0.5, 0.75, 0.95, 0.999}) {
    shift = std::max(shift, integrand(w));
  }
  if (!std::isfinite(shift)) return 0.0;

  const auto g = [&](double w) {
    const double v = integrand(w) - shift;
    return v < -745.0 ? 0.0 : std::exp(v);
  };

  QuadResult r1 = integrate(g, 0.0, 1.0, 1e-9, scheme);
  const double floor = 1e-307;
  const double tol2 =
      std::max(cfg.quadrature_abs_tol * std::max(std::fabs(r1.value), 1e-30),
               floor);
  QuadResult r2 = integrate(g, 0.0, 1.0, tol2, scheme);
  return std::exp(log_prefactor + shift) * r2.value;
}

Side pick_side(const ScalarDistribution& dist, double z) {
  return z <= dist.mean() ? Side::lower : Side::upper;
}

}  // namespace

void OracleConfig::validate() const {
  if (!(quadrature_abs_tol > 0.0) || !(fd_base_step > 0.0) ||
      richardson_levels < 2 || richardson_levels > 8)
    throw std::invalid_argument("OracleConfig: invalid field");
}

double oracle_cdf(const ScalarDistribution& dist, double z,
                  const OracleConfig& cfg, QuadScheme scheme) {
  cfg.validate();
  const Support s = dist.support();
  if (z <= s.lo) return 0.0;
  if (z >= s.hi) return 1.0;
  const Side side = pick_side(dist, z);
  const double t = tail_integral(dist, z, cfg, scheme, side);
  return side == Side::lower ? t : 1.0 - t;
}

OracleResult oracle_dcdf_dtheta(const ScalarDistribution& dist, double z,
                                int theta_index, const OracleConfig& cfg,
                                QuadScheme scheme) {
  cfg.validate();
  const double theta = dist.param(theta_index);
  double h0 = cfg.fd_base_step * std::max(std::fabs(theta), 1.0);
  const double lb = dist.param_lower_bound(theta_index);
  if (std::isfinite(lb) && theta - h0 <= lb) h0 = 0.45 * (theta - lb);

  const Side side = pick_side(dist, z);
  const double sign = side == Side::lower ? 1.0 : -1.0;

  const int levels = cfg.richardson_levels;
  std::vector<std::vector<double>> r(levels);
  for (int k = 0; k < levels; ++k) {
    const double h = h0 / double(1 << k);
    const auto hi = dist.with_param(theta_index, theta + h);
    const auto lo = dist.with_param(theta_index, theta - h);
    const double ti = tail_integral(*hi, z, cfg, scheme, side);
    const double tl = tail_integral(*lo, z, cfg, scheme, side);
    r[k].resize(k + 1);
    r[k][0] = sign * (ti - tl) / (2.0 * h);
    double pow4 = 1.0;
    for (int m = 1; m <= k; ++m) {
      pow4 *= 4.0;
      r[k][m] = (pow4 * r[k][m - 1] - r[k - 1][m - 1]) / (pow4 - 1.0);
    }
  }

  OracleResult out;
  out.value = r[levels - 1][levels - 1];
  const double last_diff =
      std::fabs(r[levels - 1][levels - 1] - r[levels - 2][levels - 2]);
  const double prev_diff =
      levels >= 3
          ? std::fabs(r[levels - 2][levels - 2] - r[levels - 3][levels - 3])
          : kInf;
  out.error_estimate = last_diff;
  // fail only when the table stops contracting above the noise floor
  const double noise_floor = 1e-6 * std::fabs(out.value) + 1e-300;
  out.ok = last_diff <= std::max(2.0 * prev_diff, noise_floor) ||
           last_diff <= noise_floor;
  return out;
}

OracleResult oracle_dz_dtheta(const ScalarDistribution& dist, double z,
                              int theta_index, const OracleConfig& cfg,
                              QuadScheme scheme) {
  const double q = dist.pdf(z);
  if (!(q > 1e-300))
    throw SingularDensityError(dist.name() + ": density vanishes at z");
  OracleResult r = oracle_dcdf_dtheta(dist, z, theta_index, cfg, scheme);
  r.value = -r.value / q;
  r.error_estimate /= q;
  return r;
}

DualOracleResult oracle_dz_dtheta_dual(const ScalarDistribution& dist,
                                       double z, int theta_index,
                                       const OracleConfig& cfg,
                                       double cross_tol) {
  const OracleResult a =
      oracle_dz_dtheta(dist, z, theta_index, cfg, QuadScheme::gauss_kronrod);
  const OracleResult b =
      oracle_dz_dtheta(dist, z, theta_index, cfg, QuadScheme::adaptive_simpson);
  DualOracleResult out;
  out.value = a.value;
  out.cross_delta = std::fabs(a.value - b.value);
  const double scale = std::max(std::fabs(a.value), std::fabs(b.value));
  out.ok = a.ok && b.ok && out.cross_delta <= cross_tol * std::max(scale, 1e-300);
  return out;
}

}  // namespace pathwise::oracle
