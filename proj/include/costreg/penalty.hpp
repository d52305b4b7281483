#ifndef COSTREG_PENALTY_HPP
#define COSTREG_PENALTY_HPP

#include <Eigen/Dense>
#include <string>

namespace costreg {

enum class PenaltyKind { L0, L1, L2, ElasticNet, WeightedL2 };

// Config names: "l0", "l1", "l2", "elastic_net", "weighted_l2".
PenaltyKind penalty_kind_from_name(const std::string& name);
std::string penalty_kind_name(PenaltyKind kind);

struct PenaltySpec {
  PenaltyKind kind = PenaltyKind::L2;
  double mix = 0.0;             // ElasticNet only: weight on the L1 part
  Eigen::VectorXd weights;      // WeightedL2 only: positive, one per coefficient

  static PenaltySpec l0() { return {PenaltyKind::L0, 0.0, {}}; }
  static PenaltySpec l1() { return {PenaltyKind::L1, 0.0, {}}; }
  static PenaltySpec l2() { return {PenaltyKind::L2, 0.0, {}}; }
  static PenaltySpec elastic_net(double mix);
  static PenaltySpec weighted_l2(Eigen::VectorXd weights);

  bool is_convex() const { return kind != PenaltyKind::L0; }
};

// g(w):
//   L1 = sum |w_i|, L2 = sum w_i^2, L0 = #nonzeros,
//   ElasticNet = mix*L1 + (1-mix)*L2, WeightedL2 = sum d_i w_i^2.
double eval_penalty(const PenaltySpec& spec, const Eigen::VectorXd& w);

// argmin_w 0.5*||v - w||^2 + theta*g(w), solved coordinate-wise.
// L0 keeps a coordinate on ties (|v_i| = sqrt(2*theta)).
Eigen::VectorXd prox_penalty(const PenaltySpec& spec, const Eigen::VectorXd& v, double theta);

}  // namespace costreg

#endif  // COSTREG_PENALTY_HPP
