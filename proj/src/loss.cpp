#include "costreg/loss.hpp"

#include <cmath>

#include "costreg/errors.hpp"

namespace costreg {

LossKind loss_kind_from_name(const std::string& name) {
  if (name == "squared") return LossKind::SquaredError;
  if (name == "logistic") return LossKind::Logistic;
  if (name == "hinge") return LossKind::Hinge;
  throw ConfigError("unknown loss kind: \"" + name + "\"");
}

std::string loss_kind_name(LossKind kind) {
  switch (kind) {
    case LossKind::SquaredError: return "squared";
    case LossKind::Logistic: return "logistic";
    case LossKind::Hinge: return "hinge";
  }
  return "squared";
}

namespace {

void check_inputs(const LossSpec& spec, const Eigen::VectorXd& w, const Dataset& d) {
  if (w.size() != spec.coef_count(d.cols()))
    throw DimensionMismatch("coefficient vector has length " + std::to_string(w.size()) +
                            ", expected " + std::to_string(spec.coef_count(d.cols())));
  if (d.labels.size() != d.rows())
    throw DimensionMismatch("labels length does not match row count");
  if (spec.is_classification()) {
    for (Index t = 0; t < d.rows(); ++t)
      if (d.labels(t) != 1.0 && d.labels(t) != -1.0)
        throw BadLabels("classification losses require labels in {-1,+1}; row " +
                        std::to_string(t) + " has " + std::to_string(d.labels(t)));
  }
}

// ln(1 + exp(z)) without overflow.
double softplus(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

// 1 / (1 + exp(-z)) without overflow.
double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

Eigen::VectorXd linear_scores(const LossSpec& spec, const Eigen::VectorXd& w, const Dataset& d) {
  const Index p = d.cols();
  Eigen::VectorXd s = d.features * w.head(p);
  if (spec.intercept) s.array() += w(p);
  return s;
}

double eval_loss(const LossSpec& spec, const Eigen::VectorXd& w, const Dataset& d) {
  check_inputs(spec, w, d);
  const double T = static_cast<double>(d.rows());
  const Eigen::VectorXd s = linear_scores(spec, w, d);

  switch (spec.kind) {
    case LossKind::SquaredError:
      return (s - d.labels).squaredNorm() / (2.0 * T);
    case LossKind::Logistic: {
      double sum = 0.0;
      for (Index t = 0; t < d.rows(); ++t) sum += softplus(-d.labels(t) * s(t));
      return sum / T;
    }
    case LossKind::Hinge: {
      double sum = 0.0;
      for (Index t = 0; t < d.rows(); ++t)
        sum += std::max(0.0, 1.0 - d.labels(t) * s(t));
      return sum / T;
    }
  }
  return 0.0;
}

Eigen::VectorXd grad_loss(const LossSpec& spec, const Eigen::VectorXd& w, const Dataset& d) {
  check_inputs(spec, w, d);
  const Index T = d.rows();
  const Index p = d.cols();
  const Eigen::VectorXd s = linear_scores(spec, w, d);

  // Per-row derivative of the loss with respect to the score.
  Eigen::VectorXd dl(T);
  switch (spec.kind) {
    case LossKind::SquaredError:
      dl = s - d.labels;
      break;
    case LossKind::Logistic:
      for (Index t = 0; t < T; ++t)
        dl(t) = -d.labels(t) * sigmoid(-d.labels(t) * s(t));
      break;
    case LossKind::Hinge:
      for (Index t = 0; t < T; ++t)
        dl(t) = (1.0 - d.labels(t) * s(t)) > 0.0 ? -d.labels(t) : 0.0;
      break;
  }
  dl /= static_cast<double>(T);

  Eigen::VectorXd g(spec.coef_count(p));
  g.head(p) = d.features.transpose() * dl;
  if (spec.intercept) g(p) = dl.sum();
  return g;
}

}  // namespace costreg
