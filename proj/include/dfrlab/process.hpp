#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dfrlab/rng.hpp"
#include "dfrlab/survival.hpp"

namespace dfrlab {

// Stage-dependent rates for a pure birth process: either affine in the stage
// index or an explicit list whose last value repeats.
class RateSequence {
 public:
  static RateSequence affine(double a, double b);          // rate(n) = a + b*n, n = 1,2,...
  static RateSequence from_list(std::vector<double> v);    // tail rule: repeat last

  double at(std::size_t n) const;  // 1-based stage index
  bool nondecreasing_up_to(std::size_t n) const;
  std::string describe() const;

 private:
  double a_ = 0.0, b_ = 0.0;
  std::vector<double> list_;
};

// Deterministic per-stage scaling c_n applied to iid draws.
class ScaleRule {
 public:
  static ScaleRule reciprocal();                        // c_n = 1/n
  static ScaleRule constant(double c);
  static ScaleRule from_list(std::vector<double> v);    // tail rule: repeat last

  double at(std::size_t n) const;
  bool nonincreasing_up_to(std::size_t n) const;
  std::string describe() const;

 private:
  enum class Kind { reciprocal, constant, list } kind_ = Kind::constant;
  double c_ = 1.0;
  std::vector<double> list_;
};

// How strongly the family's structure certifies association of consecutive
// interarrivals (and their conditional versions given the past).
enum class AssocStructure {
  independent_components,        // interarrivals are independent
  monotone_image_of_independent, // monotone functions of independent inputs
  unknown,
};

std::string to_string(AssocStructure s);

// Generator of interarrival sequences X1, X2, ... for a counting process.
// Descriptions are immutable; sampling is pure given a caller-owned stream.
class InterarrivalProcess {
 public:
  enum class Variant { iid_renewal, equilibrium_renewal, pure_birth, product, reciprocal_sum, custom };

  using JointSampler = std::function<void(std::size_t, RandomStream&, std::vector<double>&)>;

  Variant variant() const;
  const std::string& describe() const;

  // One joint draw of the first n interarrivals.
  void sample_interarrivals(std::size_t n, RandomStream& rng, std::vector<double>& out) const;
  std::vector<double> sample_interarrivals(std::size_t n, RandomStream& rng) const;

  // Closed-form marginal law of X_n (1-based), when the variant knows it.
  std::optional<SurvivalModel> marginal(std::size_t n) const;

  double first_zero_atom() const;  // P(X1 = 0)
  AssocStructure assoc_structure() const;

  // For pure birth: whether the rate sequence is nondecreasing through stage n.
  std::optional<bool> rates_nondecreasing(std::size_t n) const;

  // --- factories -----------------------------------------------------------
  static InterarrivalProcess iid_renewal(SurvivalModel interarrival);
  // X1 follows the stationary-excess law of `base`; X2, X3, ... follow `base`.
  static InterarrivalProcess equilibrium_renewal(SurvivalModel base);
  static InterarrivalProcess pure_birth(RateSequence rates);
  static InterarrivalProcess yule(double lambda);
  // X_n = Y_1 * ... * Y_n with Y_i iid on [0,1].
  static InterarrivalProcess product(SurvivalModel factor);
  // X_n = 1 / (z + Y_1 + ... + Y_n) with Y_i iid nonnegative.
  static InterarrivalProcess reciprocal_sum(double z, SurvivalModel summand);
  // X_n = c_n * W_n with W_n iid ~ base: independent, stochastically
  // decreasing when the scale rule is nonincreasing.
  static InterarrivalProcess scaled_iid(SurvivalModel base, ScaleRule scale);
  static InterarrivalProcess custom(JointSampler sampler, double first_zero_atom,
                                    AssocStructure structure, std::string description);

  class Impl;
  explicit InterarrivalProcess(std::shared_ptr<const Impl> impl);

 private:
  std::shared_ptr<const Impl> impl_;
};

// Arrival times S_1 <= S_2 <= ... built as prefix sums of interarrivals.
struct ArrivalPath {
  std::vector<double> s;
};

ArrivalPath arrival_path(std::span<const double> interarrivals);

struct CountResult {
  std::size_t count = 0;
  // Set when the path ends at or before t, so the count is only a lower bound.
  bool truncated = false;
};

// N(t) = max{ n : S_n <= t } (closed inequality at the boundary).
CountResult count_at(const ArrivalPath& path, double t);

}  // namespace dfrlab
