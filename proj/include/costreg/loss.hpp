#ifndef COSTREG_LOSS_HPP
#define COSTREG_LOSS_HPP

#include <Eigen/Dense>
#include <string>

#include "costreg/dataset.hpp"

namespace costreg {

enum class LossKind { SquaredError, Logistic, Hinge };

// Config names: "squared", "logistic", "hinge".
LossKind loss_kind_from_name(const std::string& name);
std::string loss_kind_name(LossKind kind);

struct LossSpec {
  LossKind kind = LossKind::SquaredError;
  // When set, a constant-1 feature is appended; its coefficient is the
  // last entry of w and is never penalized.
  bool intercept = false;

  bool is_classification() const { return kind != LossKind::SquaredError; }
  bool is_smooth() const { return kind != LossKind::Hinge; }
  // Expected length of w for a dataset with p feature columns.
  Index coef_count(Index p) const { return p + (intercept ? 1 : 0); }
};

// Per-row linear scores X*w (+ intercept term when enabled).
Eigen::VectorXd linear_scores(const LossSpec& spec, const Eigen::VectorXd& w, const Dataset& d);

// SquaredError = (1/(2T)) sum (x_t'w - y_t)^2
// Logistic     = (1/T)    sum ln(1 + exp(-y_t x_t'w))
// Hinge        = (1/T)    sum max(0, 1 - y_t x_t'w)
// Classification losses require labels in {-1, +1}.
double eval_loss(const LossSpec& spec, const Eigen::VectorXd& w, const Dataset& d);

// Analytic gradient of eval_loss. Hinge uses a subgradient that is zero
// at margin exactly 1.
Eigen::VectorXd grad_loss(const LossSpec& spec, const Eigen::VectorXd& w, const Dataset& d);

}  // namespace costreg

#endif  // COSTREG_LOSS_HPP
