#include "costreg/tuner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "costreg/errors.hpp"

namespace costreg {

namespace {

ScoreEntry score_lambda(const LossSpec& loss, const PenaltySpec& penalty, double lambda,
                        const Dataset& d, const FoldAssignment& folds,
                        const SolveOptions& opts) {
  ScoreEntry entry;
  entry.lambda = lambda;
  double total = 0.0;
  for (int f = 0; f < folds.k; ++f) {
    const Dataset train = d.subset(folds.rows_not_in_fold(f));
    const Dataset heldout = d.subset(folds.rows_in_fold(f));
    const Fit fit = solve_penalized(loss, penalty, lambda, train, opts);
    const double score = eval_loss(loss, fit.w, heldout);
    entry.fold_scores.push_back(score);
    entry.fold_converged.push_back(fit.converged);
    total += score;
  }
  entry.mean_score = total / static_cast<double>(folds.k);
  return entry;
}

TuneResult score_candidates(const LossSpec& loss, const PenaltySpec& penalty,
                            const std::vector<double>& lambdas, const Dataset& d,
                            const FoldAssignment& folds, const SolveOptions& opts,
                            TuneMethod method) {
  TuneResult result;
  result.method = method;
  double best = std::numeric_limits<double>::infinity();
  for (double lambda : lambdas) {
    ScoreEntry entry = score_lambda(loss, penalty, lambda, d, folds, opts);
    // <= pushes ties toward the largest lambda (candidates ascend)
    if (entry.mean_score <= best) {
      best = entry.mean_score;
      result.best_lambda = lambda;
    }
    result.scores.push_back(std::move(entry));
  }
  return result;
}

void check_folds(const Dataset& d, const FoldAssignment& folds) {
  if (folds.k < 2 || folds.fold_of_row.size() != static_cast<std::size_t>(d.rows()))
    throw DimensionMismatch("fold assignment does not match the dataset");
}

}  // namespace

std::string tune_method_name(TuneMethod method) {
  switch (method) {
    case TuneMethod::Grid: return "grid";
    case TuneMethod::Random: return "random";
    case TuneMethod::CostDerived: return "cost_derived";
  }
  return "grid";
}

TuneResult grid_search(const LossSpec& loss, const PenaltySpec& penalty,
                       const std::vector<double>& lambdas, const Dataset& d,
                       const FoldAssignment& folds, const SolveOptions& opts) {
  if (lambdas.empty()) throw ConfigError("grid search needs at least one lambda");
  for (double l : lambdas)
    if (!(l > 0.0)) throw ConfigError("grid lambdas must be positive");
  if (!std::is_sorted(lambdas.begin(), lambdas.end()))
    throw ConfigError("grid lambdas must be ascending");
  check_folds(d, folds);
  return score_candidates(loss, penalty, lambdas, d, folds, opts, TuneMethod::Grid);
}

TuneResult random_search(const LossSpec& loss, const PenaltySpec& penalty,
                         std::pair<double, double> log_range, int trials, const Dataset& d,
                         const FoldAssignment& folds, std::uint64_t seed,
                         const SolveOptions& opts) {
  const auto [lower, upper] = log_range;
  if (!(0.0 < lower && lower < upper))
    throw ConfigError("random search range must satisfy 0 < lower < upper");
  if (trials < 1) throw ConfigError("random search needs at least one trial");
  check_folds(d, folds);

  std::mt19937_64 gen(seed);
  const double log_lo = std::log(lower);
  const double log_hi = std::log(upper);
  std::vector<double> lambdas;
  lambdas.reserve(static_cast<std::size_t>(trials));
  for (int i = 0; i < trials; ++i) {
    // top 53 bits -> uniform in [0,1); identical across platforms
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    lambdas.push_back(std::exp(log_lo + u * (log_hi - log_lo)));
  }
  std::sort(lambdas.begin(), lambdas.end());

  TuneResult result = score_candidates(loss, penalty, lambdas, d, folds, opts, TuneMethod::Random);
  result.seed = seed;
  return result;
}

TuneResult recommend_lambda(const CostModel& cm, const ClassPriors& priors) {
  TuneResult result;
  result.method = TuneMethod::CostDerived;
  result.best_lambda = lambda_from_cost(cm, priors);
  ScoreEntry entry;
  entry.lambda = result.best_lambda;
  entry.mean_score = std::numeric_limits<double>::quiet_NaN();  // no validation ran
  result.scores.push_back(std::move(entry));
  return result;
}

}  // namespace costreg
