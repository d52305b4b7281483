#include "costreg/penalty.hpp"

#include <cmath>

#include "costreg/errors.hpp"

namespace costreg {

PenaltyKind penalty_kind_from_name(const std::string& name) {
  if (name == "l0") return PenaltyKind::L0;
  if (name == "l1") return PenaltyKind::L1;
  if (name == "l2") return PenaltyKind::L2;
  if (name == "elastic_net") return PenaltyKind::ElasticNet;
  if (name == "weighted_l2") return PenaltyKind::WeightedL2;
  throw ConfigError("unknown penalty kind: \"" + name + "\"");
}

std::string penalty_kind_name(PenaltyKind kind) {
  switch (kind) {
    case PenaltyKind::L0: return "l0";
    case PenaltyKind::L1: return "l1";
    case PenaltyKind::L2: return "l2";
    case PenaltyKind::ElasticNet: return "elastic_net";
    case PenaltyKind::WeightedL2: return "weighted_l2";
  }
  return "l2";
}

PenaltySpec PenaltySpec::elastic_net(double mix) {
  if (!(mix >= 0.0 && mix <= 1.0))
    throw ConfigError("elastic_net mix must lie in [0,1]");
  return {PenaltyKind::ElasticNet, mix, {}};
}

PenaltySpec PenaltySpec::weighted_l2(Eigen::VectorXd weights) {
  if (weights.size() == 0 || (weights.array() <= 0.0).any())
    throw ConfigError("weighted_l2 weights must be positive");
  return {PenaltyKind::WeightedL2, 0.0, std::move(weights)};
}

namespace {

void check_weights(const PenaltySpec& spec, Eigen::Index n) {
  if (spec.kind == PenaltyKind::WeightedL2 && spec.weights.size() != n)
    throw DimensionMismatch("weighted_l2 has " + std::to_string(spec.weights.size()) +
                            " weights for a vector of length " + std::to_string(n));
}

double soft_threshold(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

}  // namespace

double eval_penalty(const PenaltySpec& spec, const Eigen::VectorXd& w) {
  check_weights(spec, w.size());
  switch (spec.kind) {
    case PenaltyKind::L1:
      return w.lpNorm<1>();
    case PenaltyKind::L2:
      return w.squaredNorm();
    case PenaltyKind::L0:
      return static_cast<double>((w.array() != 0.0).count());
    case PenaltyKind::ElasticNet:
      return spec.mix * w.lpNorm<1>() + (1.0 - spec.mix) * w.squaredNorm();
    case PenaltyKind::WeightedL2:
      return (spec.weights.array() * w.array().square()).sum();
  }
  return 0.0;
}

Eigen::VectorXd prox_penalty(const PenaltySpec& spec, const Eigen::VectorXd& v, double theta) {
  if (!(theta > 0.0)) throw ConfigError("prox requires theta > 0");
  check_weights(spec, v.size());

  Eigen::VectorXd w(v.size());
  switch (spec.kind) {
    case PenaltyKind::L1:
      for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = soft_threshold(v(i), theta);
      break;
    case PenaltyKind::L2:
      w = v / (1.0 + 2.0 * theta);
      break;
    case PenaltyKind::L0: {
      // Keeping coordinate i costs theta, zeroing it costs v_i^2/2.
      const double keep_threshold = std::sqrt(2.0 * theta);
      for (Eigen::Index i = 0; i < v.size(); ++i)
        w(i) = std::abs(v(i)) >= keep_threshold ? v(i) : 0.0;
      break;
    }
    case PenaltyKind::ElasticNet: {
      const double shrink = 1.0 / (1.0 + 2.0 * theta * (1.0 - spec.mix));
      for (Eigen::Index i = 0; i < v.size(); ++i)
        w(i) = soft_threshold(v(i), theta * spec.mix) * shrink;
      break;
    }
    case PenaltyKind::WeightedL2:
      for (Eigen::Index i = 0; i < v.size(); ++i)
        w(i) = v(i) / (1.0 + 2.0 * theta * spec.weights(i));
      break;
  }
  return w;
}

}  // namespace costreg
