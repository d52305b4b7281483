#ifndef COSTREG_LAGRANGE_HPP
#define COSTREG_LAGRANGE_HPP

#include "costreg/dataset.hpp"
#include "costreg/loss.hpp"
#include "costreg/penalty.hpp"
#include "costreg/solver.hpp"

namespace costreg {

// Numerical check of the multiplier-as-shadow-price reading: by the
// envelope theorem, d loss*(c)/dc = -lambda* while the constraint binds,
// so |multiplier + finite_difference_slope| should vanish.
struct SensitivityReport {
  double c = 0.0;
  double multiplier = 0.0;
  double finite_difference_slope = 0.0;  // (loss*(c+dc) - loss*(c-dc)) / (2 dc)
  double residual = 0.0;                 // |multiplier + finite_difference_slope|
  double delta_c = 0.0;
};

SensitivityReport sensitivity_check(const LossSpec& loss, const PenaltySpec& penalty, double c,
                                    double delta_c, const Dataset& d,
                                    const SolveOptions& opts = {});

}  // namespace costreg

#endif  // COSTREG_LAGRANGE_HPP
