#include "costreg/lagrange.hpp"

#include <cmath>

#include "costreg/errors.hpp"

namespace costreg {

SensitivityReport sensitivity_check(const LossSpec& loss, const PenaltySpec& penalty, double c,
                                    double delta_c, const Dataset& d, const SolveOptions& opts) {
  if (!(delta_c > 0.0 && c > delta_c))
    throw ConfigError("sensitivity check requires c > delta_c > 0");
  if (!penalty.is_convex())
    throw UnsupportedPenalty("sensitivity check requires a convex penalty");

  const ConstrainedFit at_c = solve_constrained(loss, penalty, c, d, opts);
  const ConstrainedFit below = solve_constrained(loss, penalty, c - delta_c, d, opts);
  const ConstrainedFit above = solve_constrained(loss, penalty, c + delta_c, d, opts);

  SensitivityReport report;
  report.c = c;
  report.delta_c = delta_c;
  report.multiplier = at_c.multiplier;
  report.finite_difference_slope =
      (above.fit.loss_value - below.fit.loss_value) / (2.0 * delta_c);
  report.residual = std::abs(report.multiplier + report.finite_difference_slope);
  return report;
}

}  // namespace costreg
