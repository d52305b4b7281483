#include "costreg/cost_model.hpp"

#include <cmath>

#include "costreg/errors.hpp"

namespace costreg {

std::string cost_form_name(CostForm form) {
  switch (form) {
    case CostForm::Scalar: return "scalar";
    case CostForm::Binary: return "binary";
    case CostForm::Matrix: return "matrix";
    case CostForm::Unquantifiable: return "unquantifiable";
    case CostForm::Negligible: return "negligible";
  }
  return "unquantifiable";
}

CostModel CostModel::scalar(double gamma, std::string currency) {
  if (!(gamma > 0.0)) throw ConfigError("scalar cost model requires gamma > 0");
  CostModel cm;
  cm.form_ = CostForm::Scalar;
  cm.gamma_ = gamma;
  cm.currency_ = std::move(currency);
  return cm;
}

CostModel CostModel::binary(double gamma_fp, double gamma_fn, std::string currency) {
  if (gamma_fp < 0.0 || gamma_fn < 0.0)
    throw ConfigError("binary cost model requires nonnegative unit costs");
  if (!(gamma_fp + gamma_fn > 0.0))
    throw ConfigError("binary cost model requires gamma_fp + gamma_fn > 0");
  CostModel cm;
  cm.form_ = CostForm::Binary;
  cm.gamma_fp_ = gamma_fp;
  cm.gamma_fn_ = gamma_fn;
  cm.currency_ = std::move(currency);
  return cm;
}

CostModel CostModel::matrix(Eigen::MatrixXd entries, std::string currency) {
  if (entries.rows() != entries.cols() || entries.rows() < 2)
    throw ConfigError("matrix cost model must be square with k >= 2");
  if ((entries.array() < 0.0).any())
    throw ConfigError("matrix cost model entries must be nonnegative");
  for (Index i = 0; i < entries.rows(); ++i)
    if (entries(i, i) != 0.0)
      throw ConfigError("matrix cost model requires a zero diagonal (gamma_ii = 0)");
  CostModel cm;
  cm.form_ = CostForm::Matrix;
  cm.entries_ = std::move(entries);
  cm.currency_ = std::move(currency);
  return cm;
}

CostModel CostModel::unquantifiable() {
  CostModel cm;
  cm.form_ = CostForm::Unquantifiable;
  return cm;
}

CostModel CostModel::negligible() {
  CostModel cm;
  cm.form_ = CostForm::Negligible;
  return cm;
}

Index CostModel::classes() const {
  switch (form_) {
    case CostForm::Binary: return 2;
    case CostForm::Matrix: return entries_.rows();
    default: return 1;
  }
}

CostModel CostModel::scaled(double factor) const {
  if (!(factor > 0.0)) throw ConfigError("cost scale factor must be positive");
  CostModel cm = *this;
  cm.gamma_ *= factor;
  cm.gamma_fp_ *= factor;
  cm.gamma_fn_ *= factor;
  cm.entries_ *= factor;
  return cm;
}

ClassPriors ClassPriors::uniform(Index k) {
  if (k < 1) throw ConfigError("priors need at least one class");
  ClassPriors p;
  p.probabilities = Eigen::VectorXd::Constant(k, 1.0 / static_cast<double>(k));
  return p;
}

ClassPriors ClassPriors::from(std::vector<double> values) {
  ClassPriors p;
  p.probabilities = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Index>(values.size()));
  if (p.probabilities.size() < 1) throw ConfigError("priors need at least one class");
  if ((p.probabilities.array() < 0.0).any() || (p.probabilities.array() > 1.0).any())
    throw ConfigError("prior probabilities must lie in [0,1]");
  if (std::abs(p.probabilities.sum() - 1.0) > 1e-10)
    throw ConfigError("prior probabilities must sum to 1");
  return p;
}

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::UselessIntolerable: return "useless_intolerable";
    case Regime::UselessIrrelevant: return "useless_irrelevant";
    case Regime::UsefulCandidate: return "useful_candidate";
  }
  return "useful_candidate";
}

double expected_unit_cost(const CostModel& cm, const ClassPriors& priors) {
  switch (cm.form()) {
    case CostForm::Scalar:
      return cm.gamma();
    case CostForm::Binary: {
      if (priors.probabilities.size() != 2)
        throw DimensionMismatch("binary cost model needs 2 priors, got " +
                                std::to_string(priors.probabilities.size()));
      return priors.probabilities(0) * cm.gamma_fn() + priors.probabilities(1) * cm.gamma_fp();
    }
    case CostForm::Matrix: {
      const Index k = cm.entries().rows();
      if (priors.probabilities.size() != k)
        throw DimensionMismatch("matrix cost model needs " + std::to_string(k) + " priors, got " +
                                std::to_string(priors.probabilities.size()));
      // Uniform error-direction assumption: each wrong class equally likely.
      double total = 0.0;
      for (Index i = 0; i < k; ++i) {
        const double row_mean =
            (cm.entries().row(i).sum() - cm.entries()(i, i)) / static_cast<double>(k - 1);
        total += priors.probabilities(i) * row_mean;
      }
      return total;
    }
    case CostForm::Unquantifiable:
    case CostForm::Negligible:
      throw NotQuantified("cost model has no numeric value (" + cost_form_name(cm.form()) + ")");
  }
  return 0.0;
}

double lambda_from_cost(const CostModel& cm, const ClassPriors& priors) {
  const double unit = expected_unit_cost(cm, priors);
  if (!(unit > 0.0))
    throw NotQuantified("expected unit cost is zero under these priors; treat as negligible");
  return 1.0 / unit;
}

Regime classify_regime(const CostModel& cm, double gamma_low, double gamma_high) {
  if (!(gamma_low < gamma_high))
    throw ConfigError("regime thresholds require gamma_low < gamma_high");
  switch (cm.form()) {
    case CostForm::Unquantifiable:
      return Regime::UselessIntolerable;
    case CostForm::Negligible:
      return Regime::UselessIrrelevant;
    default:
      break;
  }
  const double unit = expected_unit_cost(cm, ClassPriors::uniform(std::max<Index>(cm.classes(), 1)));
  if (unit < gamma_low) return Regime::UselessIrrelevant;
  if (unit > gamma_high) return Regime::UselessIntolerable;
  return Regime::UsefulCandidate;
}

double optimal_threshold(double gamma_fp, double gamma_fn) {
  if (gamma_fp < 0.0 || gamma_fn < 0.0)
    throw ConfigError("unit costs must be nonnegative");
  if (gamma_fp + gamma_fn == 0.0)
    throw BothZero("threshold is undefined when both unit costs are zero");
  return gamma_fp / (gamma_fp + gamma_fn);
}

double expected_total_cost(const CostModel& cm, const Eigen::MatrixXd& confusion_counts) {
  if (confusion_counts.rows() != confusion_counts.cols())
    throw DimensionMismatch("confusion matrix must be square");
  const Index k = confusion_counts.rows();
  switch (cm.form()) {
    case CostForm::Scalar: {
      double off_diagonal = confusion_counts.sum() - confusion_counts.trace();
      return cm.gamma() * off_diagonal;
    }
    case CostForm::Binary: {
      if (k != 2) throw DimensionMismatch("binary cost model needs a 2x2 confusion matrix");
      return cm.gamma_fn() * confusion_counts(0, 1) + cm.gamma_fp() * confusion_counts(1, 0);
    }
    case CostForm::Matrix: {
      if (k != cm.entries().rows())
        throw DimensionMismatch("confusion matrix is " + std::to_string(k) + "x" +
                                std::to_string(k) + " but cost matrix is " +
                                std::to_string(cm.entries().rows()) + "x" +
                                std::to_string(cm.entries().rows()));
      return (cm.entries().array() * confusion_counts.array()).sum();
    }
    case CostForm::Unquantifiable:
    case CostForm::Negligible:
      throw NotQuantified("cost model has no numeric value (" + cost_form_name(cm.form()) + ")");
  }
  return 0.0;
}

}  // namespace costreg
