#ifndef COSTREG_CONFIG_HPP
#define COSTREG_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "costreg/campaign.hpp"
#include "costreg/cost_model.hpp"
#include "costreg/loss.hpp"
#include "costreg/penalty.hpp"
#include "costreg/solver.hpp"

namespace costreg {

// Resolved run configuration: JSON config file first, then command-line
// overrides on top.
struct RunConfig {
  // data
  std::optional<std::string> dataset_path;
  std::string label_column = "y";
  bool standardize_features = false;

  // model
  std::string loss_kind = "squared";
  bool intercept = false;
  std::string penalty_kind = "l2";
  double elastic_mix = 0.5;
  std::vector<double> weighted_l2;

  // regularization strength: exactly one of these drives `train`
  std::optional<double> lambda;
  std::optional<CostModel> cost_model;
  std::optional<std::vector<double>> priors;

  // campaign scenario
  std::optional<CampaignScenario> scenario;

  // tuning
  std::string tune_method = "grid";
  std::vector<double> grid_lambdas;
  std::pair<double, double> random_range{1e-4, 1e2};
  int trials = 20;
  int folds = 5;

  // regime thresholds: no universal default, the CLI demands them
  std::optional<double> gamma_low;
  std::optional<double> gamma_high;

  // contour
  std::pair<double, double> beta_range{0.01, 0.99};
  std::pair<double, double> price_range{1.0, 100.0};
  int resolution = 100;
  bool emit_svg = true;

  // constrained solve / sensitivity check
  std::optional<double> budget_c;
  double delta_c = 1e-4;

  // run
  std::string output_dir = ".";
  std::uint64_t seed = 0;
  SolveOptions solve{};

  LossSpec make_loss() const;
  PenaltySpec make_penalty() const;
  ClassPriors make_priors() const;  // uniform over cost-model classes when unset
};

// Parses the JSON config file and merges it over the defaults.
RunConfig load_config_file(const std::string& path);

// Merges a JSON document (already parsed) into an existing config.
void merge_config_json(RunConfig& cfg, const std::string& json_text, const std::string& origin);

}  // namespace costreg

#endif  // COSTREG_CONFIG_HPP
