#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dfrlab/rng.hpp"

namespace dfrlab {

enum class ReliabilityClass { DFR, NWU, NWUE, IMRL };

std::string to_string(ReliabilityClass c);
ReliabilityClass reliability_class_from_string(const std::string& s);

// A nonnegative random lifetime exposed through its survival function,
// a sampler, its mass at zero, and optional closed-form metadata. Models are
// immutable after construction; all evaluation is safe for concurrent reads,
// and sampling draws from a caller-owned stream.
class SurvivalModel {
 public:
  class Impl;

  // P(X > t); right-continuous, nonincreasing, survival(0) = 1 - zero_atom().
  double survival(double t) const;
  double log_survival(double t) const;

  // Integral of the survival function over [t, inf); nullopt when convergence
  // cannot be certified by the truncation rule.
  std::optional<double> integrated_survival(double t) const;

  double sample(RandomStream& rng) const;
  double zero_atom() const;
  std::optional<double> mean() const;

  // inf{ t : P(X <= t) >= p }.
  double quantile(double p) const;

  const std::string& family_tag() const;

  // Analytic class membership when the family knows it (e.g. an exponential
  // mixture is DFR by construction). nullopt means "decide on the grid".
  std::optional<bool> declares(ReliabilityClass c) const;

  // Empirical models report a Greenwood-style standard error of the survival
  // estimate; closed-form models report 0.
  bool is_empirical() const;
  double survival_se(double t) const;
  std::size_t sample_count() const;  // 0 for closed-form models

  // --- factories ---------------------------------------------------------
  static SurvivalModel exponential(double rate);
  static SurvivalModel weibull(double shape, double scale);
  static SurvivalModel uniform(double lo, double hi);
  static SurvivalModel deterministic(double value);
  static SurvivalModel exponential_mixture(std::vector<double> weights, std::vector<double> rates);
  static SurvivalModel empirical(std::vector<double> values, std::string tag = "empirical");
  // Mass p at zero, the rest of the distribution drawn from `base`.
  static SurvivalModel with_atom_at_zero(SurvivalModel base, double p);
  // Black-box survival function; sampling and quantiles fall back to numeric
  // inversion, integrals to adaptive quadrature.
  static SurvivalModel from_survival(std::function<double(double)> sf,
                                     std::optional<double> mean = std::nullopt,
                                     std::string tag = "custom");
  // X scaled by a positive constant c.
  static SurvivalModel scaled(SurvivalModel base, double c);

  explicit SurvivalModel(std::shared_ptr<const Impl> impl);

 private:
  friend SurvivalModel equilibrium_transform(const SurvivalModel&);
  std::shared_ptr<const Impl> impl_;
};

// Residual life at age s: survival z -> survival(s+z)/survival(s).
// Throws std::domain_error when survival(s) = 0.
SurvivalModel residual_survival(const SurvivalModel& model, double s);

// Mean residual life m(t) = int_0^inf survival(t+z)/survival(t) dz.
// nullopt marks an integral that did not converge within the truncation rule.
// Throws std::domain_error when survival(t) = 0.
std::optional<double> mean_residual_life(const SurvivalModel& model, double t);

// Stationary-excess distribution: survival t -> int_t^inf survival(u) du / mean.
// Always continuous at 0. Throws std::domain_error on zero or non-finite mean.
SurvivalModel equilibrium_transform(const SurvivalModel& model);

}  // namespace dfrlab
