#include "dfrlab/survival.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "dfrlab/numeric.hpp"

namespace dfrlab {

std::string to_string(ReliabilityClass c) {
  switch (c) {
    case ReliabilityClass::DFR: return "DFR";
    case ReliabilityClass::NWU: return "NWU";
    case ReliabilityClass::NWUE: return "NWUE";
    case ReliabilityClass::IMRL: return "IMRL";
  }
  return "DFR";
}

ReliabilityClass reliability_class_from_string(const std::string& s) {
  if (s == "DFR") return ReliabilityClass::DFR;
  if (s == "NWU") return ReliabilityClass::NWU;
  if (s == "NWUE") return ReliabilityClass::NWUE;
  if (s == "IMRL") return ReliabilityClass::IMRL;
  throw std::invalid_argument("unknown reliability class: " + s);
}

class SurvivalModel::Impl {
 public:
  virtual ~Impl() = default;

  virtual double survival(double t) const = 0;
  virtual double log_survival(double t) const { return std::log(survival(t)); }

  virtual std::optional<double> integrated_survival(double t) const {
    return integrate_decaying_tail([this](double u) { return survival(u); }, t);
  }

  virtual double sample(RandomStream& rng) const { return quantile(rng.uniform01()); }

  virtual double zero_atom() const { return 0.0; }

  virtual std::optional<double> mean() const { return integrated_survival(0.0); }

  virtual double quantile(double p) const {
    if (p <= 0.0) return 0.0;
    const double target = 1.0 - p;
    double hint = 1.0;
    if (auto m = mean(); m && *m > 0.0) hint = *m;
    return bisect_threshold([this, target](double t) { return survival(t) <= target; }, hint);
  }

  virtual const std::string& tag() const = 0;
  virtual std::optional<bool> declares(ReliabilityClass) const { return std::nullopt; }
  virtual bool is_empirical() const { return false; }
  virtual double survival_se(double) const { return 0.0; }
  virtual std::size_t sample_count() const { return 0; }
  virtual std::optional<SurvivalModel> equilibrium_closed_form() const { return std::nullopt; }
};

SurvivalModel::SurvivalModel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

double SurvivalModel::survival(double t) const { return t < 0.0 ? 1.0 : impl_->survival(t); }
double SurvivalModel::log_survival(double t) const {
  return t < 0.0 ? 0.0 : impl_->log_survival(t);
}
std::optional<double> SurvivalModel::integrated_survival(double t) const {
  if (t < 0.0) {
    auto head = impl_->integrated_survival(0.0);
    if (!head) return std::nullopt;
    return *head - t;  // survival is exactly 1 on [t, 0)
  }
  return impl_->integrated_survival(t);
}
double SurvivalModel::sample(RandomStream& rng) const { return impl_->sample(rng); }
double SurvivalModel::zero_atom() const { return impl_->zero_atom(); }
std::optional<double> SurvivalModel::mean() const { return impl_->mean(); }
double SurvivalModel::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("quantile: p must be in [0,1)");
  return impl_->quantile(p);
}
const std::string& SurvivalModel::family_tag() const { return impl_->tag(); }
std::optional<bool> SurvivalModel::declares(ReliabilityClass c) const { return impl_->declares(c); }
bool SurvivalModel::is_empirical() const { return impl_->is_empirical(); }
double SurvivalModel::survival_se(double t) const { return impl_->survival_se(t); }
std::size_t SurvivalModel::sample_count() const { return impl_->sample_count(); }

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

class ExponentialImpl final : public SurvivalModel::Impl {
 public:
  explicit ExponentialImpl(double rate) : rate_(rate), tag_("exponential") {
    require(rate > 0.0 && std::isfinite(rate), "exponential: rate must be positive and finite");
  }
  double survival(double t) const override { return std::exp(-rate_ * t); }
  double log_survival(double t) const override { return -rate_ * t; }
  std::optional<double> integrated_survival(double t) const override {
    return std::exp(-rate_ * t) / rate_;
  }
  double sample(RandomStream& rng) const override { return rng.exponential(rate_); }
  std::optional<double> mean() const override { return 1.0 / rate_; }
  double quantile(double p) const override { return -std::log1p(-p) / rate_; }
  const std::string& tag() const override { return tag_; }
  std::optional<bool> declares(ReliabilityClass) const override { return true; }
  std::optional<SurvivalModel> equilibrium_closed_form() const override {
    return SurvivalModel::exponential(rate_);
  }
  double rate() const { return rate_; }

 private:
  double rate_;
  std::string tag_;
};

class WeibullImpl final : public SurvivalModel::Impl {
 public:
  WeibullImpl(double shape, double scale) : shape_(shape), scale_(scale), tag_("weibull") {
    require(shape > 0.0 && std::isfinite(shape), "weibull: shape must be positive and finite");
    require(scale > 0.0 && std::isfinite(scale), "weibull: scale must be positive and finite");
  }
  double survival(double t) const override { return std::exp(log_survival(t)); }
  double log_survival(double t) const override { return -std::pow(t / scale_, shape_); }
  double sample(RandomStream& rng) const override { return rng.weibull(shape_, scale_); }
  std::optional<double> mean() const override {
    return scale_ * std::tgamma(1.0 + 1.0 / shape_);
  }
  double quantile(double p) const override {
    return scale_ * std::pow(-std::log1p(-p), 1.0 / shape_);
  }
  const std::string& tag() const override { return tag_; }
  std::optional<bool> declares(ReliabilityClass) const override {
    // shape <= 1: DFR, hence all four; shape > 1: strictly IFR, so none hold.
    return shape_ <= 1.0;
  }

 private:
  double shape_, scale_;
  std::string tag_;
};

class UniformImpl final : public SurvivalModel::Impl {
 public:
  UniformImpl(double lo, double hi) : lo_(lo), hi_(hi), tag_("uniform") {
    require(lo >= 0.0 && hi > lo && std::isfinite(hi), "uniform: need 0 <= lo < hi < inf");
  }
  double survival(double t) const override {
    if (t < lo_) return 1.0;
    if (t >= hi_) return 0.0;
    return (hi_ - t) / (hi_ - lo_);
  }
  std::optional<double> integrated_survival(double t) const override {
    if (t >= hi_) return 0.0;
    if (t >= lo_) {
      const double g = hi_ - t;
      return 0.5 * g * g / (hi_ - lo_);
    }
    return (lo_ - t) + 0.5 * (hi_ - lo_);
  }
  double sample(RandomStream& rng) const override { return rng.uniform(lo_, hi_); }
  std::optional<double> mean() const override { return 0.5 * (lo_ + hi_); }
  double quantile(double p) const override { return lo_ + p * (hi_ - lo_); }
  const std::string& tag() const override { return tag_; }
  std::optional<bool> declares(ReliabilityClass c) const override {
    if (c == ReliabilityClass::DFR) return false;
    return std::nullopt;
  }
  std::optional<SurvivalModel> equilibrium_closed_form() const override;

 private:
  double lo_, hi_;
  std::string tag_;
};

class DeterministicImpl final : public SurvivalModel::Impl {
 public:
  explicit DeterministicImpl(double v) : v_(v), tag_("deterministic") {
    require(v >= 0.0 && std::isfinite(v), "deterministic: value must be nonnegative and finite");
  }
  double survival(double t) const override { return t < v_ ? 1.0 : 0.0; }
  std::optional<double> integrated_survival(double t) const override {
    return std::max(v_ - t, 0.0);
  }
  double sample(RandomStream&) const override { return v_; }
  double zero_atom() const override { return v_ == 0.0 ? 1.0 : 0.0; }
  std::optional<double> mean() const override { return v_; }
  double quantile(double) const override { return v_; }
  const std::string& tag() const override { return tag_; }
  std::optional<bool> declares(ReliabilityClass c) const override {
    if (c == ReliabilityClass::DFR) return false;  // jump away from the origin
    return std::nullopt;
  }
  std::optional<SurvivalModel> equilibrium_closed_form() const override {
    return SurvivalModel::uniform(0.0, v_);
  }

 private:
  double v_;
  std::string tag_;
};

class MixtureExpImpl final : public SurvivalModel::Impl {
 public:
  MixtureExpImpl(std::vector<double> w, std::vector<double> r)
      : w_(std::move(w)), r_(std::move(r)), tag_("exponential-mixture") {
    require(!w_.empty() && w_.size() == r_.size(),
            "exponential_mixture: weights and rates must be nonempty and equal length");
    double sum = 0.0;
    for (double x : w_) {
      require(x >= 0.0 && std::isfinite(x), "exponential_mixture: weights must be nonnegative");
      sum += x;
    }
    require(std::abs(sum - 1.0) < 1e-9, "exponential_mixture: weights must sum to 1");
    for (double x : r_)
      require(x > 0.0 && std::isfinite(x), "exponential_mixture: rates must be positive");
  }
  double survival(double t) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) s += w_[i] * std::exp(-r_[i] * t);
    return s;
  }
  double log_survival(double t) const override {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] > 0.0) m = std::max(m, std::log(w_[i]) - r_[i] * t);
    if (!std::isfinite(m)) return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] > 0.0) s += std::exp(std::log(w_[i]) - r_[i] * t - m);
    return m + std::log(s);
  }
  std::optional<double> integrated_survival(double t) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) s += w_[i] / r_[i] * std::exp(-r_[i] * t);
    return s;
  }
  double sample(RandomStream& rng) const override {
    const double u = rng.uniform01();
    double acc = 0.0;
    std::size_t k = w_.size() - 1;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      acc += w_[i];
      if (u <= acc) {
        k = i;
        break;
      }
    }
    return rng.exponential(r_[k]);
  }
  std::optional<double> mean() const override {
    double m = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) m += w_[i] / r_[i];
    return m;
  }
  const std::string& tag() const override { return tag_; }
  std::optional<bool> declares(ReliabilityClass) const override { return true; }
  std::optional<SurvivalModel> equilibrium_closed_form() const override {
    // The stationary excess of an exponential mixture is again an exponential
    // mixture with weights proportional to w_i / r_i.
    const double mu = *mean();
    std::vector<double> w2(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) w2[i] = w_[i] / r_[i] / mu;
    return SurvivalModel::exponential_mixture(std::move(w2), r_);
  }

 private:
  std::vector<double> w_, r_;
  std::string tag_;
};

class EmpiricalImpl final : public SurvivalModel::Impl {
 public:
  EmpiricalImpl(std::vector<double> values, std::string tag)
      : v_(std::move(values)), tag_(std::move(tag)) {
    require(!v_.empty(), "empirical: need at least one observation");
    for (double x : v_)
      require(x >= 0.0 && std::isfinite(x), "empirical: observations must be nonnegative finite");
    std::sort(v_.begin(), v_.end());
    suffix_.resize(v_.size() + 1, 0.0);
    for (std::size_t i = v_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + v_[i];
  }
  double survival(double t) const override {
    const auto it = std::upper_bound(v_.begin(), v_.end(), t);
    return static_cast<double>(v_.end() - it) / static_cast<double>(v_.size());
  }
  std::optional<double> integrated_survival(double t) const override {
    const std::size_t i = std::upper_bound(v_.begin(), v_.end(), t) - v_.begin();
    const double n_above = static_cast<double>(v_.size() - i);
    return (suffix_[i] - t * n_above) / static_cast<double>(v_.size());
  }
  double sample(RandomStream& rng) const override { return v_[rng.index(v_.size())]; }
  double zero_atom() const override { return survival(0.0) == 1.0 ? 0.0 : 1.0 - survival(0.0); }
  std::optional<double> mean() const override {
    return suffix_[0] / static_cast<double>(v_.size());
  }
  double quantile(double p) const override {
    if (p <= 0.0) return v_.front();
    const std::size_t n = v_.size();
    std::size_t k = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
    if (k == 0) k = 1;
    return v_[std::min(k - 1, n - 1)];
  }
  const std::string& tag() const override { return tag_; }
  bool is_empirical() const override { return true; }
  double survival_se(double t) const override {
    const double s = survival(t);
    return std::sqrt(s * (1.0 - s) / static_cast<double>(v_.size()));
  }
  std::size_t sample_count() const override { return v_.size(); }

 private:
  std::vector<double> v_;
  std::vector<double> suffix_;
  std::string tag_;
};

class AtomAtZeroImpl final : public SurvivalModel::Impl {
 public:
  AtomAtZeroImpl(SurvivalModel base, double p)
      : base_(std::move(base)), p_(p), tag_(base_.family_tag() + "+zero-atom") {
    require(p >= 0.0 && p < 1.0, "with_atom_at_zero: p must be in [0,1)");
  }
  double survival(double t) const override { return (1.0 - p_) * base_.survival(t); }
  double log_survival(double t) const override {
    return std::log1p(-p_) + base_.log_survival(t);
  }
  std::optional<double> integrated_survival(double t) const override {
    auto i = base_.integrated_survival(t);
    if (!i) return std::nullopt;
    return (1.0 - p_) * *i;
  }
  double sample(RandomStream& rng) const override {
    const double u = rng.uniform01();
    const double x = base_.sample(rng);  // keep the draw count fixed per call
    return u < p_ ? 0.0 : x;
  }
  double zero_atom() const override { return p_ + (1.0 - p_) * base_.zero_atom(); }
  std::optional<double> mean() const override {
    auto m = base_.mean();
    if (!m) return std::nullopt;
    return (1.0 - p_) * *m;
  }
  double quantile(double p) const override {
    if (p <= zero_atom()) return 0.0;
    return base_.quantile((p - p_) / (1.0 - p_));
  }
  const std::string& tag() const override { return tag_; }
  std::optional<bool> declares(ReliabilityClass) const override {
    // A zero atom in front of a DFR tail keeps the jump at the origin only.
    if (base_.declares(ReliabilityClass::DFR) == std::optional<bool>(true) &&
        base_.zero_atom() == 0.0)
      return true;
    return std::nullopt;
  }
  std::optional<SurvivalModel> equilibrium_closed_form() const override {
    // The atom integrates away: the excess law of the base is unchanged.
    return equilibrium_transform(base_);
  }

 private:
  SurvivalModel base_;
  double p_;
  std::string tag_;
};

class ScaledImpl final : public SurvivalModel::Impl {
 public:
  ScaledImpl(SurvivalModel base, double c) : base_(std::move(base)), c_(c) {
    require(c > 0.0 && std::isfinite(c), "scaled: factor must be positive and finite");
    tag_ = base_.family_tag() + "-scaled";
  }
  double survival(double t) const override { return base_.survival(t / c_); }
  double log_survival(double t) const override { return base_.log_survival(t / c_); }
  std::optional<double> integrated_survival(double t) const override {
    auto i = base_.integrated_survival(t / c_);
    if (!i) return std::nullopt;
    return c_ * *i;
  }
  double sample(RandomStream& rng) const override { return c_ * base_.sample(rng); }
  double zero_atom() const override { return base_.zero_atom(); }
  std::optional<double> mean() const override {
    auto m = base_.mean();
    if (!m) return std::nullopt;
    return c_ * *m;
  }
  double quantile(double p) const override { return c_ * base_.quantile(p); }
  const std::string& tag() const override { return tag_; }
  std::optional<bool> declares(ReliabilityClass c) const override { return base_.declares(c); }

 private:
  SurvivalModel base_;
  double c_;
  std::string tag_;
};

class GenericImpl final : public SurvivalModel::Impl {
 public:
  GenericImpl(std::function<double(double)> sf, std::optional<double> mean, std::string tag)
      : sf_(std::move(sf)), mean_(mean), tag_(std::move(tag)) {}
  double survival(double t) const override { return std::clamp(sf_(t), 0.0, 1.0); }
  double zero_atom() const override { return 1.0 - survival(0.0); }
  std::optional<double> mean() const override {
    if (mean_) return mean_;
    return integrated_survival(0.0);
  }
  const std::string& tag() const override { return tag_; }

 private:
  std::function<double(double)> sf_;
  std::optional<double> mean_;
  std::string tag_;
};

class ResidualImpl final : public SurvivalModel::Impl {
 public:
  ResidualImpl(SurvivalModel base, double s)
      : base_(std::move(base)), s_(s), gs_(base_.survival(s)) {
    tag_ = base_.family_tag() + "-residual";
  }
  double survival(double t) const override { return base_.survival(s_ + t) / gs_; }
  double log_survival(double t) const override {
    return base_.log_survival(s_ + t) - std::log(gs_);
  }
  std::optional<double> integrated_survival(double t) const override {
    auto i = base_.integrated_survival(s_ + t);
    if (!i) return std::nullopt;
    return *i / gs_;
  }
  double sample(RandomStream& rng) const override {
    const double u = rng.uniform01();
    return std::max(base_.quantile(1.0 - u * gs_) - s_, 0.0);
  }
  const std::string& tag() const override { return tag_; }
  std::optional<bool> declares(ReliabilityClass) const override {
    // residual life of a DFR distribution is DFR again
    if (base_.declares(ReliabilityClass::DFR) == std::optional<bool>(true)) return true;
    return std::nullopt;
  }

 private:
  SurvivalModel base_;
  double s_;
  double gs_;
  std::string tag_;
};

class EquilibriumImpl final : public SurvivalModel::Impl {
 public:
  EquilibriumImpl(SurvivalModel base, double mu) : base_(std::move(base)), mu_(mu) {
    tag_ = base_.family_tag() + "-equilibrium";
  }
  double survival(double t) const override {
    auto i = base_.integrated_survival(t);
    if (!i) throw std::runtime_error("equilibrium survival: tail integral did not converge");
    return std::min(*i / mu_, 1.0);
  }
  std::optional<double> mean() const override {
    return integrate_decaying_tail([this](double u) { return survival(u); }, 0.0,
                                   {1e-12, 1e6, 1e-9});
  }
  const std::string& tag() const override { return tag_; }
  std::optional<bool> declares(ReliabilityClass) const override {
    // The excess law's hazard is 1/m(t), so IMRL of the base gives DFR here.
    if (base_.declares(ReliabilityClass::IMRL) == std::optional<bool>(true)) return true;
    return std::nullopt;
  }

 private:
  SurvivalModel base_;
  double mu_;
  std::string tag_;
};

std::optional<SurvivalModel> UniformImpl::equilibrium_closed_form() const {
  if (lo_ == 0.0) {
    const double b = hi_;
    return SurvivalModel::from_survival(
        [b](double t) {
          if (t >= b) return 0.0;
          const double g = 1.0 - t / b;
          return g * g;
        },
        b / 3.0, "uniform-equilibrium");
  }
  return std::nullopt;
}

}  // namespace

SurvivalModel SurvivalModel::exponential(double rate) {
  return SurvivalModel(std::make_shared<ExponentialImpl>(rate));
}
SurvivalModel SurvivalModel::weibull(double shape, double scale) {
  return SurvivalModel(std::make_shared<WeibullImpl>(shape, scale));
}
SurvivalModel SurvivalModel::uniform(double lo, double hi) {
  return SurvivalModel(std::make_shared<UniformImpl>(lo, hi));
}
SurvivalModel SurvivalModel::deterministic(double value) {
  return SurvivalModel(std::make_shared<DeterministicImpl>(value));
}
SurvivalModel SurvivalModel::exponential_mixture(std::vector<double> weights,
                                                 std::vector<double> rates) {
  return SurvivalModel(std::make_shared<MixtureExpImpl>(std::move(weights), std::move(rates)));
}
SurvivalModel SurvivalModel::empirical(std::vector<double> values, std::string tag) {
  return SurvivalModel(std::make_shared<EmpiricalImpl>(std::move(values), std::move(tag)));
}
SurvivalModel SurvivalModel::with_atom_at_zero(SurvivalModel base, double p) {
  return SurvivalModel(std::make_shared<AtomAtZeroImpl>(std::move(base), p));
}
SurvivalModel SurvivalModel::from_survival(std::function<double(double)> sf,
                                           std::optional<double> mean, std::string tag) {
  return SurvivalModel(std::make_shared<GenericImpl>(std::move(sf), mean, std::move(tag)));
}
SurvivalModel SurvivalModel::scaled(SurvivalModel base, double c) {
  return SurvivalModel(std::make_shared<ScaledImpl>(std::move(base), c));
}

SurvivalModel residual_survival(const SurvivalModel& model, double s) {
  if (s < 0.0) throw std::domain_error("residual_survival: age must be nonnegative");
  if (!(model.survival(s) > 0.0))
    throw std::domain_error("residual_survival: survival is zero at the given age");
  if (s == 0.0 && model.zero_atom() == 0.0) return model;
  return SurvivalModel(std::make_shared<ResidualImpl>(model, s));
}

std::optional<double> mean_residual_life(const SurvivalModel& model, double t) {
  const double g = model.survival(t);
  if (!(g > 0.0)) throw std::domain_error("mean_residual_life: survival is zero at t");
  auto i = model.integrated_survival(t);
  if (!i) return std::nullopt;
  return *i / g;
}

SurvivalModel equilibrium_transform(const SurvivalModel& model) {
  auto mu = model.mean();
  if (!mu || !(*mu > 0.0) || !std::isfinite(*mu))
    throw std::domain_error("equilibrium_transform: mean must be finite and positive");
  if (auto closed = model.impl_->equilibrium_closed_form()) return *closed;
  return SurvivalModel(std::make_shared<EquilibriumImpl>(model, *mu));
}

}  // namespace dfrlab
