#pragma once

#include <cstddef>
#include <vector>

#include "dfrlab/survival.hpp"
#include "dfrlab/verdict.hpp"

namespace dfrlab {

// Evaluation grid for class checks. The class definitions quantify over all
// real t,z >= 0; the artifact checks them on a finite grid and reports the
// verdict as grid-relative (see the note attached to every verdict).
struct EvalGrid {
  std::vector<double> points;

  static EvalGrid from_points(std::vector<double> pts);
  // 0 plus `n` log-spaced points between the lo_q and hi_q quantiles,
  // plus any user-supplied extras.
  static EvalGrid for_model(const SurvivalModel& m, std::size_t n = 64, double lo_q = 0.001,
                            double hi_q = 0.999, const std::vector<double>& extra = {});
  // Shared grid for two-sample comparisons: linear span of both supports
  // plus both models' deciles.
  static EvalGrid for_comparison(const SurvivalModel& x, const SurvivalModel& y,
                                 std::size_t n = 64, const std::vector<double>& extra = {});
};

// Checks one reliability class on the grid. tol < 0 selects the default
// policy: 1e-9 absolute slack for closed-form models, 3 standard errors for
// empirical ones. Families with analytic class knowledge short-circuit to
// the analytic verdict (a failing family still reports a grid witness).
ClassVerdict check_class(const SurvivalModel& model, ReliabilityClass cls, const EvalGrid& grid,
                         double tol = -1.0);

// True when the survival function is nonincreasing across the sorted grid.
bool survival_nonincreasing_on(const SurvivalModel& model, const EvalGrid& grid);

}  // namespace dfrlab
