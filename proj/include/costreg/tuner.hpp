#ifndef COSTREG_TUNER_HPP
#define COSTREG_TUNER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "costreg/cost_model.hpp"
#include "costreg/dataset.hpp"
#include "costreg/loss.hpp"
#include "costreg/penalty.hpp"
#include "costreg/solver.hpp"

namespace costreg {

enum class TuneMethod { Grid, Random, CostDerived };

std::string tune_method_name(TuneMethod method);

struct ScoreEntry {
  double lambda = 0.0;
  double mean_score = 0.0;              // mean held-out loss across folds
  std::vector<double> fold_scores;      // per-fold held-out loss
  std::vector<bool> fold_converged;     // false marks a best-iterate score
};

struct TuneResult {
  double best_lambda = 0.0;
  std::vector<ScoreEntry> scores;
  TuneMethod method = TuneMethod::Grid;
  std::uint64_t seed = 0;  // Random only
};

// Cross-validated search over an ascending candidate list. The held-out
// metric is the bare loss (no penalty term); ties at the best mean score
// resolve toward the largest lambda.
TuneResult grid_search(const LossSpec& loss, const PenaltySpec& penalty,
                       const std::vector<double>& lambdas, const Dataset& d,
                       const FoldAssignment& folds, const SolveOptions& opts = {});

// Log-uniform samples over [lower, upper], then scored exactly like
// grid_search. Deterministic for a fixed seed.
TuneResult random_search(const LossSpec& loss, const PenaltySpec& penalty,
                         std::pair<double, double> log_range, int trials, const Dataset& d,
                         const FoldAssignment& folds, std::uint64_t seed,
                         const SolveOptions& opts = {});

// No search at all: lambda = 1 / expected unit cost of a false alarm.
TuneResult recommend_lambda(const CostModel& cm, const ClassPriors& priors);

}  // namespace costreg

#endif  // COSTREG_TUNER_HPP
