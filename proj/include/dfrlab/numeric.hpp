#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace dfrlab {

// Standard normal quantile, Acklam's rational approximation (|error| < 1.2e-9).
double normal_quantile(double p);

// z-score for a two-sided confidence level, e.g. 0.99 -> 2.5758.
double confidence_z(double confidence);

// Adaptive Simpson integration of f over [a,b] to absolute tolerance tol.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10);

struct TailIntegralOptions {
  double ratio_cutoff = 1e-12;  // stop once f(x)/f(from) falls below this
  double horizon = 1e6;         // give up past from + horizon
  double tol = 1e-10;
};

// Integral of a nonincreasing nonnegative f over [from, inf). The horizon is
// expanded geometrically until the integrand has decayed below the cutoff;
// returns nullopt when it has not decayed by the configured horizon, in which
// case convergence cannot be certified.
std::optional<double> integrate_decaying_tail(const std::function<double(double)>& f, double from,
                                              const TailIntegralOptions& opts = {});

// Smallest t >= 0 with pred(t) true, assuming pred is false-then-true
// monotone. Brackets by doubling from `hint`, then bisects.
double bisect_threshold(const std::function<bool(double)>& pred, double hint = 1.0);

}  // namespace dfrlab
