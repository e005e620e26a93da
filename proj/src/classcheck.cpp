#include "dfrlab/classcheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dfrlab {

namespace {

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Points of the grid where the survival function is still positive.
std::vector<double> usable_points(const SurvivalModel& m, const EvalGrid& grid) {
  std::vector<double> out;
  for (double t : grid.points)
    if (t >= 0.0 && m.survival(t) > 0.0) out.push_back(t);
  return out;
}

double ratio_se(const SurvivalModel& m, double num_t, double den_t) {
  const double gn = m.survival(num_t), gd = m.survival(den_t);
  const double sn = m.survival_se(num_t), sd = m.survival_se(den_t);
  return std::sqrt(sn * sn / (gd * gd) + gn * gn * sd * sd / (gd * gd * gd * gd));
}

struct Slack {
  double base;     // absolute tolerance
  double z;        // multiplier on propagated standard errors
};

}  // namespace

EvalGrid EvalGrid::from_points(std::vector<double> pts) {
  if (pts.empty()) throw std::invalid_argument("evaluation grid must be nonempty");
  for (double t : pts)
    if (!(t >= 0.0) || !std::isfinite(t))
      throw std::invalid_argument("evaluation grid points must be nonnegative finite");
  return EvalGrid{sorted_unique(std::move(pts))};
}

EvalGrid EvalGrid::for_model(const SurvivalModel& m, std::size_t n, double lo_q, double hi_q,
                             const std::vector<double>& extra) {
  if (n < 2) throw std::invalid_argument("grid size must be at least 2");
  double lo = m.quantile(lo_q);
  double hi = m.quantile(hi_q);
  if (!(hi > 0.0)) hi = 1.0;
  if (!(lo > 0.0) || lo >= hi) lo = hi * 1e-6;
  std::vector<double> pts{0.0};
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(n - 1);
    pts.push_back(std::exp(llo + f * (lhi - llo)));
  }
  pts.insert(pts.end(), extra.begin(), extra.end());
  return from_points(std::move(pts));
}

EvalGrid EvalGrid::for_comparison(const SurvivalModel& x, const SurvivalModel& y, std::size_t n,
                                  const std::vector<double>& extra) {
  double hi = std::max(x.quantile(0.999), y.quantile(0.999));
  if (!(hi > 0.0)) hi = 1.0;
  std::vector<double> pts{0.0};
  for (std::size_t i = 1; i <= n; ++i)
    pts.push_back(hi * static_cast<double>(i) / static_cast<double>(n));
  for (int d = 1; d <= 19; ++d) {
    const double p = 0.05 * d;
    pts.push_back(x.quantile(p));
    pts.push_back(y.quantile(p));
  }
  pts.insert(pts.end(), extra.begin(), extra.end());
  return from_points(std::move(pts));
}

namespace {

ClassVerdict scan_dfr(const SurvivalModel& m, const std::vector<double>& ts, const Slack& sl) {
  ClassVerdict best = ClassVerdict::pass(std::numeric_limits<double>::infinity());
  for (double z : ts) {
    if (z <= 0.0) continue;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      const double t0 = ts[i], t1 = ts[i + 1];
      const double r0 = m.survival(z + t0) / m.survival(t0);
      const double r1 = m.survival(z + t1) / m.survival(t1);
      const double diff = r1 - r0;
      const double slack =
          sl.base + sl.z * std::hypot(ratio_se(m, z + t0, t0), ratio_se(m, z + t1, t1));
      best.margin = std::min(best.margin, diff);
      if (diff < -slack) {
        Witness w{"survival(z+t)/survival(t) must be nondecreasing in t", t1, z, r1, r0};
        return ClassVerdict::fail(std::move(w), diff);
      }
    }
  }
  return best;
}

ClassVerdict scan_nwu(const SurvivalModel& m, const std::vector<double>& ts, const Slack& sl) {
  ClassVerdict best = ClassVerdict::pass(std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i; j < ts.size(); ++j) {
      const double z = ts[i], t = ts[j];
      const double lhs = m.survival(z) * m.survival(t);
      const double rhs = m.survival(z + t);
      const double diff = rhs - lhs;
      double slack = sl.base;
      if (m.is_empirical()) {
        const double se = std::hypot(
            m.survival_se(z + t),
            std::hypot(m.survival(z) * m.survival_se(t), m.survival(t) * m.survival_se(z)));
        slack += sl.z * se;
      }
      best.margin = std::min(best.margin, diff);
      if (diff < -slack) {
        Witness w{"survival(z)*survival(t) <= survival(z+t)", t, z, lhs, rhs};
        return ClassVerdict::fail(std::move(w), diff);
      }
    }
  }
  return best;
}

ClassVerdict scan_nwue(const SurvivalModel& m, const std::vector<double>& ts, const Slack& sl) {
  auto mu = m.mean();
  if (!mu) return ClassVerdict::unknown("mean not evaluable within the truncation horizon");
  ClassVerdict best = ClassVerdict::pass(std::numeric_limits<double>::infinity());
  for (double t : ts) {
    auto mrl = mean_residual_life(m, t);
    if (!mrl)
      return ClassVerdict::unknown("mean residual life not evaluable at t=" + std::to_string(t));
    const double diff = *mrl - *mu;
    double slack = sl.base;
    if (m.is_empirical()) slack += sl.z * (*mrl) * m.survival_se(t) / m.survival(t);
    best.margin = std::min(best.margin, diff);
    if (diff < -slack) {
      Witness w{"mean <= mean residual life at t", t, 0.0, *mu, *mrl};
      return ClassVerdict::fail(std::move(w), diff);
    }
  }
  return best;
}

ClassVerdict scan_imrl(const SurvivalModel& m, const std::vector<double>& ts, const Slack& sl) {
  ClassVerdict best = ClassVerdict::pass(std::numeric_limits<double>::infinity());
  double prev = 0.0, prev_t = 0.0;
  bool have_prev = false;
  for (double t : ts) {
    auto mrl = mean_residual_life(m, t);
    if (!mrl)
      return ClassVerdict::unknown("mean residual life not evaluable at t=" + std::to_string(t));
    if (have_prev) {
      const double diff = *mrl - prev;
      double slack = sl.base;
      if (m.is_empirical())
        slack += sl.z * std::hypot(*mrl * m.survival_se(t) / m.survival(t),
                                   prev * m.survival_se(prev_t) / m.survival(prev_t));
      best.margin = std::min(best.margin, diff);
      if (diff < -slack) {
        Witness w{"mean residual life must be nondecreasing", t, prev_t, *mrl, prev};
        return ClassVerdict::fail(std::move(w), diff);
      }
    }
    prev = *mrl;
    prev_t = t;
    have_prev = true;
  }
  return best;
}

}  // namespace

ClassVerdict check_class(const SurvivalModel& model, ReliabilityClass cls, const EvalGrid& grid,
                         double tol) {
  if (grid.points.empty()) throw std::invalid_argument("check_class: empty grid");
  const auto ts = usable_points(model, grid);
  if (ts.size() < 2)
    throw std::invalid_argument("check_class: fewer than two grid points inside the support");

  Slack sl;
  sl.base = tol >= 0.0 ? tol : (model.is_empirical() ? 0.0 : 1e-9);
  sl.z = 3.0;

  const auto analytic = model.declares(cls);
  if (analytic == std::optional<bool>(true))
    return ClassVerdict::pass(std::numeric_limits<double>::infinity(),
                              "analytic: family " + model.family_tag() + " is " + to_string(cls));

  ClassVerdict v;
  switch (cls) {
    case ReliabilityClass::DFR: v = scan_dfr(model, ts, sl); break;
    case ReliabilityClass::NWU: v = scan_nwu(model, ts, sl); break;
    case ReliabilityClass::NWUE: v = scan_nwue(model, ts, sl); break;
    case ReliabilityClass::IMRL: v = scan_imrl(model, ts, sl); break;
  }

  if (analytic == std::optional<bool>(false) && !v.fails()) {
    v.status = VerdictStatus::inconclusive;
    v.note = "family " + model.family_tag() + " is not " + to_string(cls) +
             " analytically, but no violation surfaced on this grid";
    return v;
  }
  if (v.status == VerdictStatus::holds && v.note.empty())
    v.note = "grid-relative verdict (" + std::to_string(ts.size()) + " points), slack policy " +
             (model.is_empirical() ? std::string("3 se") : std::string("abs tol"));
  return v;
}

bool survival_nonincreasing_on(const SurvivalModel& model, const EvalGrid& grid) {
  double prev = 1.0 + 1e-15;
  for (double t : grid.points) {
    const double s = model.survival(t);
    if (s > prev + 1e-12) return false;
    prev = s;
  }
  return true;
}

}  // namespace dfrlab
