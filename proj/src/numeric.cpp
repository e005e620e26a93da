#include "dfrlab/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfrlab {

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal_quantile: p must be in (0,1)");

  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};

  const double plow = 0.02425;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  q = p - 0.5;
  r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double confidence_z(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0))
    throw std::domain_error("confidence must be in (0,1)");
  return normal_quantile(0.5 + confidence / 2.0);
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, tol * 0.5, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, tol * 0.5, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = simpson(f, a, fa, b, fb, m, fm);
  return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

std::optional<double> integrate_decaying_tail(const std::function<double(double)>& f, double from,
                                              const TailIntegralOptions& opts) {
  const double f0 = f(from);
  if (f0 <= 0.0) return 0.0;
  const double cutoff = f0 * opts.ratio_cutoff;

  // Find a horizon where the integrand has decayed.
  double span = 1.0;
  while (f(from + span) > cutoff) {
    span *= 2.0;
    if (span > opts.horizon) return std::nullopt;
  }

  // Integrate in geometric panels so the short head does not get swamped by
  // the long tail's panel widths.
  double total = 0.0;
  double lo = from, width = std::min(span, 1.0);
  while (lo < from + span) {
    const double hi = std::min(lo + width, from + span);
    total += integrate_adaptive(f, lo, hi, opts.tol * std::max(1.0, width) / span);
    lo = hi;
    width *= 2.0;
  }
  return total;
}

double bisect_threshold(const std::function<bool(double)>& pred, double hint) {
  double lo = 0.0;
  double hi = hint > 0.0 ? hint : 1.0;
  int guard = 0;
  while (!pred(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 1200) return std::numeric_limits<double>::infinity();
  }
  for (int i = 0; i < 200 && (hi - lo) > 1e-14 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace dfrlab
