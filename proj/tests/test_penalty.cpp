#include <doctest.h>

#include <random>

#include "costreg/errors.hpp"
#include "costreg/penalty.hpp"
#include "support/oracles.hpp"

using namespace costreg;

namespace {

Eigen::Vector3d v123() { return {1.0, -2.0, 3.0}; }

}  // namespace

TEST_CASE("eval_penalty closed forms") {
  CHECK(eval_penalty(PenaltySpec::l1(), v123()) == 6.0);
  CHECK(eval_penalty(PenaltySpec::l2(), v123()) == 14.0);
  CHECK(eval_penalty(PenaltySpec::l0(), Eigen::Vector3d{0.0, 0.5, -3.0}) == 2.0);
  CHECK(eval_penalty(PenaltySpec::elastic_net(0.5), Eigen::Vector2d{1.0, -2.0}) ==
        doctest::Approx(4.0));  // 0.5*3 + 0.5*5
  Eigen::Vector2d weights{2.0, 3.0};
  CHECK(eval_penalty(PenaltySpec::weighted_l2(weights), Eigen::Vector2d{1.0, -1.0}) ==
        doctest::Approx(5.0));
}

TEST_CASE("penalty validation") {
  CHECK_THROWS_AS(PenaltySpec::elastic_net(1.5), ConfigError);
  CHECK_THROWS_AS(PenaltySpec::weighted_l2(Eigen::Vector2d{1.0, 0.0}), ConfigError);
  const auto spec = PenaltySpec::weighted_l2(Eigen::Vector2d{1.0, 2.0});
  CHECK_THROWS_AS(eval_penalty(spec, v123()), DimensionMismatch);
  CHECK_THROWS_AS(prox_penalty(spec, v123(), 1.0), DimensionMismatch);
  CHECK_THROWS_AS(prox_penalty(PenaltySpec::l1(), v123(), 0.0), ConfigError);
}

TEST_CASE("penalty kind names round trip") {
  for (auto kind : {PenaltyKind::L0, PenaltyKind::L1, PenaltyKind::L2, PenaltyKind::ElasticNet,
                    PenaltyKind::WeightedL2})
    CHECK(penalty_kind_from_name(penalty_kind_name(kind)) == kind);
  CHECK_THROWS_AS(penalty_kind_from_name("ridge"), ConfigError);
}

TEST_CASE("prox closed forms") {
  Eigen::VectorXd one(1);

  one << 3.0;
  CHECK(prox_penalty(PenaltySpec::l1(), one, 1.0)(0) == doctest::Approx(2.0));
  one << -0.5;
  CHECK(prox_penalty(PenaltySpec::l1(), one, 1.0)(0) == 0.0);

  // stationarity (w - 4) + 2w = 0 -> w = 4/3
  one << 4.0;
  CHECK(prox_penalty(PenaltySpec::l2(), one, 1.0)(0) == doctest::Approx(4.0 / 3.0));

  // hard threshold sqrt(2*2) = 2: keep 3, drop 1
  Eigen::Vector2d v{3.0, 1.0};
  const Eigen::VectorXd kept = prox_penalty(PenaltySpec::l0(), v, 2.0);
  CHECK(kept(0) == 3.0);
  CHECK(kept(1) == 0.0);

  // tie |v| = sqrt(2*theta) keeps the coordinate
  one << 2.0;
  CHECK(prox_penalty(PenaltySpec::l0(), one, 2.0)(0) == 2.0);
}

TEST_CASE("penalties vanish at zero and are nonnegative") {
  std::mt19937_64 gen(11);
  const std::vector<PenaltySpec> specs = {
      PenaltySpec::l0(), PenaltySpec::l1(), PenaltySpec::l2(), PenaltySpec::elastic_net(0.3),
      PenaltySpec::weighted_l2(Eigen::Vector4d{0.5, 1.0, 2.0, 3.0})};
  for (const auto& spec : specs) {
    CHECK(eval_penalty(spec, Eigen::VectorXd::Zero(4)) == 0.0);
    for (int rep = 0; rep < 50; ++rep) {
      Eigen::VectorXd w(4);
      for (Index j = 0; j < 4; ++j) w(j) = 6.0 * testing::u01(gen) - 3.0;
      CHECK(eval_penalty(spec, w) >= 0.0);
    }
  }
}

TEST_CASE("L1 is absolutely homogeneous, L2 scales quadratically") {
  std::mt19937_64 gen(12);
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::VectorXd w(5);
    for (Index j = 0; j < 5; ++j) w(j) = 4.0 * testing::u01(gen) - 2.0;
    const double c = 6.0 * testing::u01(gen) - 3.0;
    CHECK(eval_penalty(PenaltySpec::l1(), c * w) ==
          doctest::Approx(std::abs(c) * eval_penalty(PenaltySpec::l1(), w)).epsilon(1e-12));
    CHECK(eval_penalty(PenaltySpec::l2(), c * w) ==
          doctest::Approx(c * c * eval_penalty(PenaltySpec::l2(), w)).epsilon(1e-12));
  }
}

TEST_CASE("elastic net interpolates its endpoints exactly") {
  std::mt19937_64 gen(13);
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::VectorXd w(6);
    for (Index j = 0; j < 6; ++j) w(j) = 4.0 * testing::u01(gen) - 2.0;
    CHECK(eval_penalty(PenaltySpec::elastic_net(1.0), w) == eval_penalty(PenaltySpec::l1(), w));
    CHECK(eval_penalty(PenaltySpec::elastic_net(0.0), w) == eval_penalty(PenaltySpec::l2(), w));
  }
}

TEST_CASE("prox output beats random perturbations") {
  // 0.5*||v - prox||^2 + theta*g(prox) <= the same at 1000 perturbed points,
  // per separable coordinate.
  std::mt19937_64 gen(14);
  const std::vector<PenaltySpec> specs = {
      PenaltySpec::l0(), PenaltySpec::l1(), PenaltySpec::l2(), PenaltySpec::elastic_net(0.4),
      PenaltySpec::weighted_l2(Eigen::Vector3d{0.5, 1.5, 4.0})};
  for (const auto& spec : specs) {
    Eigen::VectorXd v(3);
    for (Index j = 0; j < 3; ++j) v(j) = 8.0 * testing::u01(gen) - 4.0;
    const double theta = 0.1 + 2.0 * testing::u01(gen);
    const Eigen::VectorXd best = prox_penalty(spec, v, theta);
    const double best_value = 0.5 * (v - best).squaredNorm() + theta * eval_penalty(spec, best);
    for (int rep = 0; rep < 1000; ++rep) {
      Eigen::VectorXd other = best;
      const Index j = static_cast<Index>(gen() % 3);
      other(j) += 2.0 * testing::u01(gen) - 1.0;
      const double other_value =
          0.5 * (v - other).squaredNorm() + theta * eval_penalty(spec, other);
      CHECK(best_value <= other_value + 1e-12);
    }
  }
}
