#include <doctest.h>

#include <cmath>
#include <random>

#include "costreg/cost_model.hpp"
#include "costreg/errors.hpp"
#include "support/oracles.hpp"

using namespace costreg;

TEST_CASE("expected unit cost collapses each form") {
  const ClassPriors even = ClassPriors::from({0.5, 0.5});
  CHECK(expected_unit_cost(CostModel::binary(5, 5), even) == doctest::Approx(5.0));

  const ClassPriors skew = ClassPriors::from({0.3, 0.7});
  CHECK(expected_unit_cost(CostModel::binary(2, 10), skew) ==
        doctest::Approx(4.4));  // 0.3*10 + 0.7*2

  CHECK(expected_unit_cost(CostModel::scalar(2), even) == 2.0);
  CHECK(expected_unit_cost(CostModel::scalar(2), ClassPriors::uniform(1)) == 2.0);

  Eigen::Matrix3d entries;
  entries << 0, 1, 2, 3, 0, 4, 5, 6, 0;
  // rows average to 1.5, 3.5, 5.5
  const ClassPriors p3 = ClassPriors::from({0.2, 0.3, 0.5});
  CHECK(expected_unit_cost(CostModel::matrix(entries), p3) ==
        doctest::Approx(0.2 * 1.5 + 0.3 * 3.5 + 0.5 * 5.5));
}

TEST_CASE("lambda_from_cost inverts the expected unit cost") {
  const ClassPriors even = ClassPriors::from({0.5, 0.5});
  CHECK(lambda_from_cost(CostModel::scalar(2), even) == doctest::Approx(0.5));
  CHECK(lambda_from_cost(CostModel::binary(2, 10), ClassPriors::from({0.3, 0.7})) ==
        doctest::Approx(1.0 / 4.4));

  // round trip within 1e-12 relative
  std::mt19937_64 gen(40);
  for (int rep = 0; rep < 200; ++rep) {
    const double gamma = std::exp(12.0 * testing::u01(gen) - 6.0);
    const double lambda = lambda_from_cost(CostModel::scalar(gamma), even);
    CHECK(std::abs(1.0 / lambda - gamma) <= 1e-12 * gamma);
  }
}

TEST_CASE("quantification guards") {
  const ClassPriors even = ClassPriors::from({0.5, 0.5});
  CHECK_THROWS_AS(expected_unit_cost(CostModel::unquantifiable(), even), NotQuantified);
  CHECK_THROWS_AS(expected_unit_cost(CostModel::negligible(), even), NotQuantified);
  CHECK_THROWS_AS(lambda_from_cost(CostModel::unquantifiable(), even), NotQuantified);
  // degenerate priors x costs can zero the expected cost
  CHECK_THROWS_AS(lambda_from_cost(CostModel::binary(0.0, 3.0), ClassPriors::from({0.0, 1.0})),
                  NotQuantified);
  CHECK_THROWS_AS(expected_unit_cost(CostModel::binary(1, 2), ClassPriors::from({1.0})),
                  DimensionMismatch);
}

TEST_CASE("cost model validation") {
  CHECK_THROWS_AS(CostModel::scalar(0.0), ConfigError);
  CHECK_THROWS_AS(CostModel::binary(0.0, 0.0), ConfigError);
  CHECK_THROWS_AS(CostModel::binary(-1.0, 2.0), ConfigError);
  Eigen::Matrix2d dirty;
  dirty << 0.5, 1, 2, 0;  // nonzero diagonal
  CHECK_THROWS_AS(CostModel::matrix(dirty), ConfigError);
  Eigen::Matrix2d negative;
  negative << 0, -1, 2, 0;
  CHECK_THROWS_AS(CostModel::matrix(negative), ConfigError);
  CHECK_THROWS_AS(ClassPriors::from({0.5, 0.4}), ConfigError);
  CHECK_THROWS_AS(ClassPriors::from({1.5, -0.5}), ConfigError);
}

TEST_CASE("regime classification covers every form") {
  CHECK(classify_regime(CostModel::unquantifiable(), 1e-3, 1e6) == Regime::UselessIntolerable);
  CHECK(classify_regime(CostModel::negligible(), 1e-3, 1e6) == Regime::UselessIrrelevant);
  CHECK(classify_regime(CostModel::scalar(1e-9), 1e-3, 1e6) == Regime::UselessIrrelevant);
  CHECK(classify_regime(CostModel::scalar(1e9), 1e-3, 1e6) == Regime::UselessIntolerable);
  CHECK(classify_regime(CostModel::scalar(2), 1e-3, 1e6) == Regime::UsefulCandidate);
  CHECK(classify_regime(CostModel::binary(2, 10), 1e-3, 1e6) == Regime::UsefulCandidate);
  Eigen::Matrix2d entries;
  entries << 0, 4, 2, 0;
  CHECK(classify_regime(CostModel::matrix(entries), 1e-3, 1e6) == Regime::UsefulCandidate);
  CHECK_THROWS_AS(classify_regime(CostModel::scalar(2), 5.0, 1.0), ConfigError);
}

TEST_CASE("optimal threshold closed form") {
  CHECK(optimal_threshold(1, 1) == doctest::Approx(0.5));
  CHECK(optimal_threshold(1, 3) == doctest::Approx(0.25));
  CHECK(optimal_threshold(0, 5) == 0.0);  // free false positives: always predict positive
  CHECK_THROWS_AS(optimal_threshold(0, 0), BothZero);
  CHECK_THROWS_AS(optimal_threshold(-1, 1), ConfigError);
}

TEST_CASE("expected total cost over a confusion matrix") {
  Eigen::Matrix2d counts;
  counts << 10, 3,  // 3 false negatives (true positive, predicted negative)
      2, 20;        // 2 false positives
  CHECK(expected_total_cost(CostModel::binary(5, 10), counts) == doctest::Approx(40.0));

  Eigen::Matrix2d perfect;
  perfect << 12, 0, 0, 33;
  CHECK(expected_total_cost(CostModel::binary(5, 10), perfect) == 0.0);
  CHECK(expected_total_cost(CostModel::binary(5, 10), Eigen::Matrix2d::Zero()) == 0.0);

  CHECK(expected_total_cost(CostModel::scalar(2), counts) == doctest::Approx(10.0));

  Eigen::Matrix3d entries;
  entries << 0, 1, 2, 3, 0, 4, 5, 6, 0;
  Eigen::Matrix3d c3 = Eigen::Matrix3d::Ones();
  CHECK(expected_total_cost(CostModel::matrix(entries), c3) == doctest::Approx(21.0));
  CHECK_THROWS_AS(expected_total_cost(CostModel::matrix(entries), counts), DimensionMismatch);
  CHECK_THROWS_AS(expected_total_cost(CostModel::unquantifiable(), counts), NotQuantified);
}

TEST_CASE("scaling costs by a dyadic factor rescales the rates exactly") {
  const ClassPriors priors = ClassPriors::from({0.25, 0.75});
  const CostModel base = CostModel::binary(2.0, 10.0);
  for (double k : {2.0, 4.0, 0.5, 0.125, 1024.0}) {
    const CostModel scaled = base.scaled(k);
    CHECK(expected_unit_cost(scaled, priors) == k * expected_unit_cost(base, priors));
    CHECK(lambda_from_cost(scaled, priors) == lambda_from_cost(base, priors) / k);
    CHECK(optimal_threshold(scaled.gamma_fp(), scaled.gamma_fn()) ==
          optimal_threshold(base.gamma_fp(), base.gamma_fn()));
  }
  // non-dyadic factors stay within a couple of ulps
  std::mt19937_64 gen(41);
  for (int rep = 0; rep < 100; ++rep) {
    const double k = 0.1 + 9.9 * testing::u01(gen);
    const CostModel scaled = base.scaled(k);
    CHECK(expected_unit_cost(scaled, priors) ==
          doctest::Approx(k * expected_unit_cost(base, priors)).epsilon(1e-14));
    CHECK(optimal_threshold(scaled.gamma_fp(), scaled.gamma_fn()) ==
          doctest::Approx(optimal_threshold(base.gamma_fp(), base.gamma_fn())).epsilon(1e-14));
  }
}

TEST_CASE("optimal threshold beats a 101-point grid on synthetic scored populations") {
  std::mt19937_64 gen(42);
  for (int rep = 0; rep < 10; ++rep) {
    const double gfp = 0.2 + 5.0 * testing::u01(gen);
    const double gfn = 0.2 + 5.0 * testing::u01(gen);
    const CostModel cm = CostModel::binary(gfp, gfn);

    // calibrated scores: item with score s is positive with probability s
    std::vector<double> scores(400);
    for (double& s : scores) s = testing::u01(gen);

    auto cost_at = [&](double threshold) {
      Eigen::Matrix2d counts = Eigen::Matrix2d::Zero();
      for (double s : scores) {
        if (s > threshold)
          counts(1, 0) += 1.0 - s;  // expected false positives
        else
          counts(0, 1) += s;  // expected false negatives
      }
      return expected_total_cost(cm, counts);
    };

    const double best = cost_at(optimal_threshold(gfp, gfn));
    for (int g = 0; g <= 100; ++g) CHECK(best <= cost_at(g / 100.0) + 1e-9);
  }
}
