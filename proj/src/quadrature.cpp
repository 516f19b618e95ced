#include "pathwise/quadrature.hpp"

#include <cmath>
#include <cstdlib>

namespace pathwise::oracle {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss
// rule (positive half; rule is symmetric).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Workspace {
  const std::function<double(double)>* f;
  int evaluations = 0;
  double error_sum = 0.0;
  bool hit_depth_cap = false;
};

void gk15(Workspace& ws, double a, double b, double& value, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = (*ws.f)(c - h * kXgk[j]);
    fv[14 - j] = (*ws.f)(c + h * kXgk[j]);
  }
  fv[7] = (*ws.f)(c);
  ws.evaluations += 15;
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
    if (j % 2 == 1) resg += kWg[j / 2] * (fv[j] + fv[14 - j]);
  }
  value = resk * h;
  err = std::fabs((resk - resg) * h);
}

double adapt_gk(Workspace& ws, double a, double b, double tol, int depth) {
  double v, e;
  gk15(ws, a, b, v, e);
  if (e <= tol || depth >= 52) {
    if (depth >= 52 && e > tol) ws.hit_depth_cap = true;
    ws.error_sum += e;
    return v;
  }
  const double m = 0.5 * (a + b);
  return adapt_gk(ws, a, m, 0.5 * tol, depth + 1) +
         adapt_gk(ws, m, b, 0.5 * tol, depth + 1);
}

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt_simpson(Workspace& ws, double a, double fa, double m, double fm,
                     double b, double fb, double whole, double tol,
                     int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = (*ws.f)(lm);
  const double frm = (*ws.f)(rm);
  ws.evaluations += 2;
  const double left = simpson(a, fa, flm, m, fm);
  const double right = simpson(m, fm, frm, b, fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol || depth >= 52) {
    if (depth >= 52 && std::fabs(delta) > 15.0 * tol) ws.hit_depth_cap = true;
    ws.error_sum += std::fabs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adapt_simpson(ws, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1) +
         adapt_simpson(ws, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, QuadScheme scheme) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  Workspace ws;
  ws.f = &f;
  if (scheme == QuadScheme::gauss_kronrod) {
    out.value = adapt_gk(ws, a, b, abs_tol, 0);
  } else {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    ws.evaluations += 3;
    const double whole = simpson(a, fa, fm, b, fb);
    out.value = adapt_simpson(ws, a, fa, m, fm, b, fb, whole, abs_tol, 0);
  }
  out.error_estimate = ws.error_sum;
  out.evaluations = ws.evaluations;
  out.converged = !ws.hit_depth_cap;
  return out;
}

}  // namespace pathwise::oracle
