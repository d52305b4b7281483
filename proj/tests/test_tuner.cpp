#include <doctest.h>

#include <cmath>
#include <random>

#include "costreg/errors.hpp"
#include "costreg/tuner.hpp"
#include "support/oracles.hpp"

using namespace costreg;

namespace {

const LossSpec kSquared{LossKind::SquaredError, false};

// Well-specified ridge problem with enough noise that the held-out curve
// is U-shaped over a wide lambda grid.
Dataset noisy_ridge_instance() { return testing::random_regression(60, 8, 400, 2.0); }

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> grid;
  for (int i = 0; i < points; ++i)
    grid.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (points - 1)));
  return grid;
}

}  // namespace

TEST_CASE("single-candidate grid picks the only option") {
  const Dataset d = testing::random_regression(20, 3, 401);
  const FoldAssignment folds = split_folds(d, 4, 7);
  const TuneResult r = grid_search(kSquared, PenaltySpec::l2(), {0.1}, d, folds);
  CHECK(r.best_lambda == 0.1);
  CHECK(r.method == TuneMethod::Grid);
  REQUIRE(r.scores.size() == 1);
  CHECK(r.scores[0].fold_scores.size() == 4);
}

TEST_CASE("ties resolve toward the largest lambda") {
  const Dataset d = testing::random_regression(20, 3, 402);
  const FoldAssignment folds = split_folds(d, 4, 7);
  // duplicate candidates score identically; the later (equal, hence
  // largest) one must win
  const TuneResult r = grid_search(kSquared, PenaltySpec::l2(), {0.2, 0.2}, d, folds);
  CHECK(r.scores[0].mean_score == r.scores[1].mean_score);
  CHECK(r.best_lambda == 0.2);
  // and a genuinely flat pair: lambda large enough that w = 0 for both
  const TuneResult flat =
      grid_search(kSquared, PenaltySpec::l1(), {1e6, 2e6}, d, folds);
  CHECK(flat.scores[0].mean_score == flat.scores[1].mean_score);
  CHECK(flat.best_lambda == 2e6);
}

TEST_CASE("the held-out curve is U-shaped with an interior best lambda") {
  const Dataset d = noisy_ridge_instance();
  const FoldAssignment folds = split_folds(d, 5, 11);
  const std::vector<double> grid = log_grid(1e-4, 1e3, 12);
  const TuneResult r = grid_search(kSquared, PenaltySpec::l2(), grid, d, folds);

  REQUIRE(r.scores.size() == grid.size());
  CHECK(r.best_lambda > grid.front());
  CHECK(r.best_lambda < grid.back());
  // ends of the curve are worse than the chosen interior point
  double best_mean = std::numeric_limits<double>::infinity();
  for (const auto& e : r.scores) best_mean = std::min(best_mean, e.mean_score);
  CHECK(r.scores.front().mean_score > best_mean);
  CHECK(r.scores.back().mean_score > best_mean);
}

TEST_CASE("grid scores are exhaustive and internally consistent") {
  const Dataset d = testing::random_regression(24, 4, 403);
  const FoldAssignment folds = split_folds(d, 3, 2);
  const std::vector<double> grid = {0.01, 0.1, 1.0};
  const TuneResult r = grid_search(kSquared, PenaltySpec::l1(), grid, d, folds);

  REQUIRE(r.scores.size() == 3);
  double best_mean = std::numeric_limits<double>::infinity();
  double best_lambda = 0.0;
  for (std::size_t i = 0; i < r.scores.size(); ++i) {
    CHECK(r.scores[i].lambda == grid[i]);
    REQUIRE(r.scores[i].fold_scores.size() == 3);
    double mean = 0.0;
    for (double s : r.scores[i].fold_scores) mean += s;
    mean /= 3.0;
    CHECK(std::abs(mean - r.scores[i].mean_score) < 1e-12);
    if (r.scores[i].mean_score <= best_mean) {
      best_mean = r.scores[i].mean_score;
      best_lambda = r.scores[i].lambda;
    }
  }
  CHECK(r.best_lambda == best_lambda);
}

TEST_CASE("random search is deterministic for a fixed seed") {
  const Dataset d = testing::random_regression(24, 4, 404);
  const FoldAssignment folds = split_folds(d, 3, 2);
  const TuneResult a =
      random_search(kSquared, PenaltySpec::l2(), {1e-3, 1e2}, 10, d, folds, 99);
  const TuneResult b =
      random_search(kSquared, PenaltySpec::l2(), {1e-3, 1e2}, 10, d, folds, 99);
  REQUIRE(a.scores.size() == b.scores.size());
  CHECK(a.best_lambda == b.best_lambda);
  CHECK(a.seed == 99);
  for (std::size_t i = 0; i < a.scores.size(); ++i) {
    CHECK(a.scores[i].lambda == b.scores[i].lambda);
    CHECK(a.scores[i].mean_score == b.scores[i].mean_score);
  }
  const TuneResult c =
      random_search(kSquared, PenaltySpec::l2(), {1e-3, 1e2}, 10, d, folds, 100);
  CHECK(a.scores[0].lambda != c.scores[0].lambda);
}

TEST_CASE("samples respect the log range and trials = 1 returns the sample") {
  const Dataset d = testing::random_regression(24, 4, 405);
  const FoldAssignment folds = split_folds(d, 3, 2);
  const TuneResult one =
      random_search(kSquared, PenaltySpec::l2(), {0.5, 2.0}, 1, d, folds, 5);
  REQUIRE(one.scores.size() == 1);
  CHECK(one.best_lambda == one.scores[0].lambda);
  const TuneResult many =
      random_search(kSquared, PenaltySpec::l2(), {0.5, 2.0}, 40, d, folds, 5);
  for (const auto& e : many.scores) {
    CHECK(e.lambda >= 0.5);
    CHECK(e.lambda <= 2.0);
  }
}

TEST_CASE("50 random trials do at least as well as a 5-point grid") {
  const Dataset d = noisy_ridge_instance();
  const FoldAssignment folds = split_folds(d, 5, 11);
  const TuneResult wide =
      random_search(kSquared, PenaltySpec::l2(), {1e-4, 1e3}, 50, d, folds, 13);
  const TuneResult coarse =
      grid_search(kSquared, PenaltySpec::l2(), log_grid(1e-4, 1e3, 5), d, folds);
  auto best_mean = [](const TuneResult& r) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : r.scores) best = std::min(best, e.mean_score);
    return best;
  };
  CHECK(best_mean(wide) <= best_mean(coarse));
}

TEST_CASE("cost-derived recommendation performs no search") {
  const TuneResult scalar = recommend_lambda(CostModel::scalar(4), ClassPriors::uniform(1));
  CHECK(scalar.best_lambda == doctest::Approx(0.25));
  CHECK(scalar.method == TuneMethod::CostDerived);
  REQUIRE(scalar.scores.size() == 1);
  CHECK(scalar.scores[0].fold_scores.empty());

  const TuneResult binary =
      recommend_lambda(CostModel::binary(2, 10), ClassPriors::from({0.3, 0.7}));
  CHECK(binary.best_lambda == doctest::Approx(1.0 / 4.4).epsilon(1e-12));

  CHECK_THROWS_AS(recommend_lambda(CostModel::unquantifiable(), ClassPriors::uniform(1)),
                  NotQuantified);
}

TEST_CASE("dyadic cost scaling rescales the recommendation exactly") {
  const ClassPriors priors = ClassPriors::from({0.4, 0.6});
  const CostModel base = CostModel::binary(3, 7);
  const double lambda = recommend_lambda(base, priors).best_lambda;
  for (double k : {2.0, 8.0, 0.25}) {
    CHECK(recommend_lambda(base.scaled(k), priors).best_lambda == lambda / k);
  }
}

TEST_CASE("tuner input validation") {
  const Dataset d = testing::random_regression(12, 3, 406);
  const FoldAssignment folds = split_folds(d, 3, 2);
  CHECK_THROWS_AS(grid_search(kSquared, PenaltySpec::l2(), {}, d, folds), ConfigError);
  CHECK_THROWS_AS(grid_search(kSquared, PenaltySpec::l2(), {0.5, 0.1}, d, folds), ConfigError);
  CHECK_THROWS_AS(grid_search(kSquared, PenaltySpec::l2(), {0.0, 0.1}, d, folds), ConfigError);
  CHECK_THROWS_AS(random_search(kSquared, PenaltySpec::l2(), {2.0, 1.0}, 5, d, folds, 1),
                  ConfigError);
  CHECK_THROWS_AS(random_search(kSquared, PenaltySpec::l2(), {1.0, 2.0}, 0, d, folds, 1),
                  ConfigError);
}
