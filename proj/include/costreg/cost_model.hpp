#ifndef COSTREG_COST_MODEL_HPP
#define COSTREG_COST_MODEL_HPP

#include <Eigen/Dense>
#include <string>

#include "costreg/dataset.hpp"

namespace costreg {

// The unit cost or risk of a false alarm. Unquantifiable and Negligible
// are explicit variants rather than sentinel numerics: they are business
// verdicts, and infinities or zeros would poison downstream arithmetic.
enum class CostForm { Scalar, Binary, Matrix, Unquantifiable, Negligible };

std::string cost_form_name(CostForm form);

// Binary class order convention throughout: index 0 is the positive
// class, index 1 the negative class. The equivalent matrix entry
// gamma(i,j) is the unit cost when true class i is predicted as j.
class CostModel {
 public:
  static CostModel scalar(double gamma, std::string currency = "");
  static CostModel binary(double gamma_fp, double gamma_fn, std::string currency = "");
  static CostModel matrix(Eigen::MatrixXd entries, std::string currency = "");
  static CostModel unquantifiable();
  static CostModel negligible();

  CostForm form() const { return form_; }
  bool quantified() const {
    return form_ == CostForm::Scalar || form_ == CostForm::Binary || form_ == CostForm::Matrix;
  }
  double gamma() const { return gamma_; }
  double gamma_fp() const { return gamma_fp_; }
  double gamma_fn() const { return gamma_fn_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  const std::string& currency_unit() const { return currency_; }
  Index classes() const;  // 2 for Binary, k for Matrix, 1 for Scalar

  // Every cost entry multiplied by factor > 0.
  CostModel scaled(double factor) const;

 private:
  CostModel() = default;
  CostForm form_ = CostForm::Unquantifiable;
  double gamma_ = 0.0;
  double gamma_fp_ = 0.0;
  double gamma_fn_ = 0.0;
  Eigen::MatrixXd entries_;
  std::string currency_;
};

struct ClassPriors {
  Eigen::VectorXd probabilities;

  static ClassPriors uniform(Index k);
  static ClassPriors from(std::vector<double> values);
};

enum class Regime { UselessIntolerable, UselessIrrelevant, UsefulCandidate };

std::string regime_name(Regime regime);

// Collapses the cost model to one scalar rate: Scalar passes through,
// Binary is pi_pos*gamma_fn + pi_neg*gamma_fp (the cost incurred when the
// true class is missed), Matrix averages each row's off-diagonal entries
// uniformly and weights by the prior.
double expected_unit_cost(const CostModel& cm, const ClassPriors& priors);

// lambda = 1 / expected unit cost.
double lambda_from_cost(const CostModel& cm, const ClassPriors& priors);

// Unquantifiable or expected cost above gamma_high -> UselessIntolerable;
// Negligible or expected cost below gamma_low -> UselessIrrelevant;
// otherwise UsefulCandidate. Binary/Matrix forms collapse with uniform
// priors, since no prior information enters this call.
Regime classify_regime(const CostModel& cm, double gamma_low, double gamma_high);

// Bayes decision threshold for a Binary cost pair: predict positive when
// the estimated positive-class probability exceeds gfp / (gfp + gfn).
double optimal_threshold(double gamma_fp, double gamma_fn);

// sum_ij gamma_ij * count_ij over a confusion matrix (real-valued counts
// accepted, so expected counts work too). Scalar models charge gamma for
// every off-diagonal count.
double expected_total_cost(const CostModel& cm, const Eigen::MatrixXd& confusion_counts);

}  // namespace costreg

#endif  // COSTREG_COST_MODEL_HPP
