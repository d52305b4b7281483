#ifndef COSTREG_SOLVER_HPP
#define COSTREG_SOLVER_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "costreg/dataset.hpp"
#include "costreg/loss.hpp"
#include "costreg/penalty.hpp"

namespace costreg {

enum class SolveAlgorithm { Auto, ClosedForm, CoordinateDescent, ProxGradient };

struct SolveOptions {
  int max_iterations = 20000;
  double tolerance = 1e-12;  // relative objective-change stop across a sweep
  std::uint64_t seed = 1;    // restart randomization for the L0 search

  // Diagnostics: when set, receives the objective value after every sweep
  // (first entry is the starting objective).
  std::vector<double>* objective_trace = nullptr;
  // Auto picks closed form / coordinate descent / proximal gradient by
  // loss-penalty combination; forcing an algorithm is mainly for tests.
  SolveAlgorithm algorithm = SolveAlgorithm::Auto;
};

struct Fit {
  Eigen::VectorXd w;
  double loss_value = 0.0;
  double penalty_value = 0.0;
  double objective = 0.0;  // loss_value + lambda * penalty_value
  double lambda = 0.0;
  int iterations_used = 0;
  bool converged = false;
};

struct ConstrainedFit {
  Fit fit;
  double c = 0.0;
  double multiplier = 0.0;  // lambda* with g(w*) = c; 0 when inactive
  bool constraint_active = false;
};

// minimize l(f(X;w), y) + lambda * g(w). The intercept coordinate, when
// present, is never penalized. Dispatch:
//   SquaredError + L2/WeightedL2   -> closed-form linear solve
//   SquaredError/Logistic + L1/EN  -> cyclic coordinate descent
//   L0                             -> coordinate descent + local swap search
//   anything else                  -> proximal gradient with backtracking
// Hinge is handled by the proximal-gradient route with a subgradient;
// best-effort, since the dispatch table above only certifies smooth losses.
Fit solve_penalized(const LossSpec& loss, const PenaltySpec& penalty, double lambda,
                    const Dataset& d, const SolveOptions& opts = {});

// minimize gamma * l + g, identical minimizer to solve_penalized with
// lambda = 1/gamma. The reported decomposition is rescaled to cost units
// (loss term gamma*l, penalty term gamma*g), which keeps
// objective = loss_value + lambda * penalty_value = gamma*l + g exact.
Fit solve_cost_scaled(const LossSpec& loss, const PenaltySpec& penalty, double gamma,
                      const Dataset& d, const SolveOptions& opts = {});

// minimize l subject to g(w) <= c for convex penalties. If the
// unconstrained minimizer is feasible the multiplier is 0; otherwise the
// multiplier is found by bisection on the monotone map lambda -> g(w*(lambda)).
ConstrainedFit solve_constrained(const LossSpec& loss, const PenaltySpec& penalty, double c,
                                 const Dataset& d, const SolveOptions& opts = {});

}  // namespace costreg

#endif  // COSTREG_SOLVER_HPP
