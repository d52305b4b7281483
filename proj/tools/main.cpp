#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "costreg/campaign.hpp"
#include "costreg/config.hpp"
#include "costreg/cost_model.hpp"
#include "costreg/dataset.hpp"
#include "costreg/errors.hpp"
#include "costreg/lagrange.hpp"
#include "costreg/report.hpp"
#include "costreg/solver.hpp"
#include "costreg/svg_contour.hpp"
#include "costreg/tuner.hpp"

namespace {

using namespace costreg;

void emit(const RunConfig& cfg, const std::string& filename, const std::string& content) {
  std::filesystem::create_directories(cfg.output_dir);
  const std::string path = (std::filesystem::path(cfg.output_dir) / filename).string();
  write_text_file(path, content);
  std::cout << content;
}

void echo_solver_inputs(ReportDoc& doc, const RunConfig& cfg) {
  doc.kv("data", cfg.dataset_path.value_or("<none>"));
  doc.kv("label", cfg.label_column);
  doc.kv("standardize", cfg.standardize_features);
  doc.kv("loss", cfg.loss_kind);
  doc.kv("intercept", cfg.intercept);
  doc.kv("penalty", cfg.penalty_kind);
  if (cfg.penalty_kind == "elastic_net") doc.kv("mix", cfg.elastic_mix);
  doc.kv("seed", cfg.seed);
  doc.kv("tolerance", cfg.solve.tolerance);
  doc.kv("max_iterations", cfg.solve.max_iterations);
}

void echo_cost_model(ReportDoc& doc, const CostModel& cm, const ClassPriors& priors) {
  doc.kv("cost_form", cost_form_name(cm.form()));
  if (cm.form() == CostForm::Scalar) doc.kv("gamma", cm.gamma());
  if (cm.form() == CostForm::Binary) {
    doc.kv("gamma_fp", cm.gamma_fp());
    doc.kv("gamma_fn", cm.gamma_fn());
  }
  if (cm.form() == CostForm::Matrix) {
    std::string flat;
    for (Index i = 0; i < cm.entries().rows(); ++i)
      for (Index j = 0; j < cm.entries().cols(); ++j) {
        if (!flat.empty()) flat += ',';
        flat += format_double(cm.entries()(i, j));
      }
    doc.kv("entries_row_major", flat);
  }
  if (!cm.currency_unit().empty()) doc.kv("currency", cm.currency_unit());
  std::string ps;
  for (Index i = 0; i < priors.probabilities.size(); ++i) {
    if (!ps.empty()) ps += ',';
    ps += format_double(priors.probabilities(i));
  }
  doc.kv("priors", ps);
  doc.kv("aggregation", "prior-weighted expected unit cost");
}

void echo_scenario(ReportDoc& doc, const CampaignScenario& s) {
  doc.kv("n_total", s.n_total);
  doc.kv("n0", s.n_negative_pred);
  doc.kv("n1", s.n_positive_pred);
  doc.kv("alpha", s.alpha);
  doc.kv("beta", s.beta);
  doc.kv("theta", s.theta);
  doc.kv("unit_fp_cost", s.unit_fp_cost);
  doc.kv("price", s.price);
  doc.kv("opportunity_cost", s.opportunity_cost());
}

Dataset load_dataset(const RunConfig& cfg) {
  if (!cfg.dataset_path)
    throw ConfigError("a dataset is required (--data or config data.path)");
  Dataset d = load_csv(*cfg.dataset_path, cfg.label_column);
  if (cfg.standardize_features) d = standardize(d).first;
  return d;
}

int run_train(const RunConfig& cfg) {
  const bool has_lambda = cfg.lambda.has_value();
  const bool has_cost = cfg.cost_model.has_value();
  if (has_lambda == has_cost)
    throw ConfigError("train requires exactly one of --lambda or a cost model (--gamma / config)");

  const Dataset d = load_dataset(cfg);
  const LossSpec loss = cfg.make_loss();
  const PenaltySpec penalty = cfg.make_penalty();
  SolveOptions opts = cfg.solve;
  opts.seed = cfg.seed;

  ReportDoc doc("costreg train report");
  doc.section("inputs");
  echo_solver_inputs(doc, cfg);
  doc.kv("rows", static_cast<std::int64_t>(d.rows()));
  doc.kv("features", static_cast<std::int64_t>(d.cols()));

  Fit fit;
  if (has_cost) {
    const ClassPriors priors = cfg.make_priors();
    echo_cost_model(doc, *cfg.cost_model, priors);
    const double gamma_bar = expected_unit_cost(*cfg.cost_model, priors);
    doc.kv("expected_unit_cost", gamma_bar);
    fit = solve_cost_scaled(loss, penalty, gamma_bar, d, opts);
  } else {
    fit = solve_penalized(loss, penalty, *cfg.lambda, d, opts);
  }
  doc.kv("lambda", fit.lambda);

  doc.section("coefficients");
  for (Index j = 0; j < d.cols(); ++j) doc.kv(d.feature_names[static_cast<std::size_t>(j)], fit.w(j));
  if (loss.intercept) doc.kv("intercept", fit.w(fit.w.size() - 1));

  doc.section("fit");
  doc.kv("loss_value", fit.loss_value);
  doc.kv("penalty_value", fit.penalty_value);
  doc.kv("objective", fit.objective);
  doc.kv("iterations_used", fit.iterations_used);
  doc.kv("converged", fit.converged);

  doc.section("checks");
  const double identity_gap =
      std::abs(fit.objective - (fit.loss_value + fit.lambda * fit.penalty_value));
  doc.kv("objective_identity_holds", identity_gap <= 1e-10);

  emit(cfg, "train_report.txt", doc.str());
  if (!fit.converged) {
    std::cerr << "solver did not converge within " << opts.max_iterations << " iterations\n";
    return 3;
  }
  return 0;
}

int run_tune(const RunConfig& cfg) {
  ReportDoc doc("costreg tune report");
  doc.section("inputs");
  doc.kv("method", cfg.tune_method);

  TuneResult result;
  if (cfg.tune_method == "cost") {
    if (!cfg.cost_model) throw ConfigError("tune --method cost requires a cost model");
    const ClassPriors priors = cfg.make_priors();
    echo_cost_model(doc, *cfg.cost_model, priors);
    result = recommend_lambda(*cfg.cost_model, priors);
  } else {
    const Dataset d = load_dataset(cfg);
    echo_solver_inputs(doc, cfg);
    doc.kv("rows", static_cast<std::int64_t>(d.rows()));
    doc.kv("folds", cfg.folds);
    const FoldAssignment folds = split_folds(d, cfg.folds, cfg.seed);
    SolveOptions opts = cfg.solve;
    opts.seed = cfg.seed;
    if (cfg.tune_method == "grid") {
      if (cfg.grid_lambdas.empty())
        throw ConfigError("tune --method grid requires --lambdas or config tuning.lambdas");
      result = grid_search(cfg.make_loss(), cfg.make_penalty(), cfg.grid_lambdas, d, folds, opts);
    } else if (cfg.tune_method == "random") {
      doc.kv("range_low", cfg.random_range.first);
      doc.kv("range_high", cfg.random_range.second);
      doc.kv("trials", cfg.trials);
      result = random_search(cfg.make_loss(), cfg.make_penalty(), cfg.random_range, cfg.trials, d,
                             folds, cfg.seed, opts);
    } else {
      throw ConfigError("unknown tune method: \"" + cfg.tune_method + "\" (grid|random|cost)");
    }
  }

  doc.section("scores");
  for (std::size_t i = 0; i < result.scores.size(); ++i) {
    const ScoreEntry& e = result.scores[i];
    std::string line = "lambda=" + format_double(e.lambda);
    line += std::isnan(e.mean_score) ? " mean=n/a" : " mean=" + format_double(e.mean_score);
    if (!e.fold_scores.empty()) {
      line += " folds=";
      for (std::size_t f = 0; f < e.fold_scores.size(); ++f) {
        if (f) line += ',';
        line += format_double(e.fold_scores[f]);
        if (!e.fold_converged[f]) line += "(best-iterate)";
      }
    }
    doc.kv("candidate_" + std::to_string(i), line);
  }

  doc.section("result");
  doc.kv("method", tune_method_name(result.method));
  if (result.method == TuneMethod::Random) doc.kv("seed", result.seed);
  doc.kv("best_lambda", result.best_lambda);

  emit(cfg, "tune_report.txt", doc.str());
  return 0;
}

int run_profit(const RunConfig& cfg) {
  if (!cfg.scenario) throw ConfigError("profit requires a scenario (config block or flags)");
  CampaignScenario s = *cfg.scenario;
  s.validate();
  const ProfitReport r = is_ml_useful(s);

  ReportDoc doc("costreg profit report");
  doc.section("inputs");
  echo_scenario(doc, s);
  doc.section("results");
  doc.kv("profit_with_ml", r.profit_with_ml);
  doc.kv("profit_without_ml", r.profit_without_ml);
  doc.kv("differential", r.differential);
  doc.kv("lhs", r.lhs);
  doc.kv("rhs", r.rhs);
  doc.kv("useful", r.useful);
  const auto precision = precision_condition(s);
  doc.kv("precision_condition",
         precision ? std::string(*precision ? "true" : "false") : std::string("not applicable"));
  doc.section("checks");
  doc.kv("forms_agree", r.forms_agree);

  emit(cfg, "profit_report.txt", doc.str());
  return 0;
}

int run_contour(const RunConfig& cfg) {
  if (!cfg.scenario) throw ConfigError("contour requires a scenario (config block or flags)");
  const ProfitGrid grid =
      contour_grid(*cfg.scenario, cfg.beta_range, cfg.price_range, cfg.resolution);

  std::filesystem::create_directories(cfg.output_dir);
  const auto dir = std::filesystem::path(cfg.output_dir);
  write_text_file((dir / "contour.csv").string(), contour_csv(grid));
  if (cfg.emit_svg) write_text_file((dir / "contour.svg").string(), svg_contour(grid));

  std::cout << "contour grid " << cfg.resolution << "x" << cfg.resolution << " written ("
            << format_double(grid.values.minCoeff()) << " .. "
            << format_double(grid.values.maxCoeff()) << ")\n";
  return 0;
}

int run_regime(const RunConfig& cfg) {
  if (!cfg.cost_model) throw ConfigError("regime requires a cost model");
  if (!cfg.gamma_low || !cfg.gamma_high)
    throw ConfigError("regime requires explicit --gamma-low and --gamma-high thresholds");
  const Regime verdict = classify_regime(*cfg.cost_model, *cfg.gamma_low, *cfg.gamma_high);

  ReportDoc doc("costreg regime report");
  doc.section("inputs");
  echo_cost_model(doc, *cfg.cost_model, cfg.make_priors());
  doc.kv("gamma_low", *cfg.gamma_low);
  doc.kv("gamma_high", *cfg.gamma_high);
  doc.section("results");
  doc.kv("regime", regime_name(verdict));

  emit(cfg, "regime_report.txt", doc.str());
  return 0;
}

int run_lagrange_check(const RunConfig& cfg) {
  if (!cfg.budget_c) throw ConfigError("lagrange-check requires --c (the complexity budget)");
  const Dataset d = load_dataset(cfg);
  SolveOptions opts = cfg.solve;
  opts.seed = cfg.seed;
  const SensitivityReport r = sensitivity_check(cfg.make_loss(), cfg.make_penalty(), *cfg.budget_c,
                                                cfg.delta_c, d, opts);

  ReportDoc doc("costreg lagrange-check report");
  doc.section("inputs");
  echo_solver_inputs(doc, cfg);
  doc.kv("c", r.c);
  doc.kv("delta_c", r.delta_c);
  doc.section("results");
  doc.kv("multiplier", r.multiplier);
  doc.kv("finite_difference_slope", r.finite_difference_slope);
  doc.kv("residual", r.residual);

  emit(cfg, "lagrange_report.txt", doc.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"costreg: cost-aware regularization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_dir;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--output-dir", output_dir, "directory for emitted artifacts");

  // shared model/data overrides
  std::optional<std::string> data_path, label, loss_kind, penalty_kind;
  std::optional<double> mix, lambda, gamma;
  std::optional<bool> intercept, standardize_flag;
  std::vector<double> weights;

  auto add_model_options = [&](CLI::App* cmd) {
    cmd->add_option("--data", data_path, "CSV dataset path");
    cmd->add_option("--label", label, "label column name");
    cmd->add_option("--loss", loss_kind, "squared|logistic|hinge");
    cmd->add_option("--penalty", penalty_kind, "l0|l1|l2|elastic_net|weighted_l2");
    cmd->add_option("--mix", mix, "elastic net weight on the L1 part");
    cmd->add_option("--weights", weights, "weighted_l2 per-feature weights")->delimiter(',');
    cmd->add_flag("--intercept,!--no-intercept", intercept, "fit an unpenalized intercept");
    cmd->add_flag("--standardize", standardize_flag, "standardize features before fitting");
  };

  CLI::App* train = app.add_subcommand("train", "fit a penalized model");
  add_model_options(train);
  train->add_option("--lambda", lambda, "explicit regularization strength");
  train->add_option("--gamma", gamma, "scalar unit cost of a false alarm (lambda = 1/gamma)");

  // tune
  std::optional<std::string> tune_method;
  std::vector<double> tune_lambdas;
  std::optional<std::pair<double, double>> tune_range;
  std::optional<int> trials, folds;
  CLI::App* tune = app.add_subcommand("tune", "select lambda by grid/random search or from costs");
  add_model_options(tune);
  tune->add_option("--method", tune_method, "grid|random|cost");
  tune->add_option("--lambdas", tune_lambdas, "ascending grid candidates")->delimiter(',');
  tune->add_option("--range", tune_range, "random-search range: low high");
  tune->add_option("--trials", trials, "random-search trial count");
  tune->add_option("--folds", folds, "cross-validation fold count");
  tune->add_option("--gamma", gamma, "scalar unit cost for --method cost");

  // scenario overrides
  std::optional<double> price, beta, alpha, theta, n_total, n0, n1, unit_fp_cost;
  auto add_scenario_options = [&](CLI::App* cmd) {
    cmd->add_option("--price", price, "revenue per acquired customer (C)");
    cmd->add_option("--beta", beta, "false-positive probability");
    cmd->add_option("--alpha", alpha, "false-negative probability");
    cmd->add_option("--theta", theta, "non-ML acceptance probability");
    cmd->add_option("--n-total", n_total, "out-of-sample size N");
    cmd->add_option("--n0", n0, "predicted-negative count");
    cmd->add_option("--n1", n1, "predicted-positive count");
    cmd->add_option("--unit-fp-cost", unit_fp_cost, "cost per recommendation (B)");
  };

  CLI::App* profit = app.add_subcommand("profit", "campaign profit with and without ML");
  add_scenario_options(profit);

  std::optional<std::pair<double, double>> beta_range, price_range;
  std::optional<int> resolution;
  bool no_svg = false;
  CLI::App* contour = app.add_subcommand("contour", "profit surface CSV (and SVG) over beta x price");
  add_scenario_options(contour);
  contour->add_option("--beta-range", beta_range, "beta axis range: low high");
  contour->add_option("--price-range", price_range, "price axis range: low high");
  contour->add_option("--resolution", resolution, "grid points per axis");
  contour->add_flag("--no-svg", no_svg, "skip the SVG rendering");

  std::optional<double> gamma_low, gamma_high;
  CLI::App* regime = app.add_subcommand("regime", "usefulness regime of a cost model");
  regime->add_option("--gamma", gamma, "scalar unit cost of a false alarm");
  regime->add_option("--gamma-low", gamma_low, "below this the cost is irrelevant");
  regime->add_option("--gamma-high", gamma_high, "above this the cost is intolerable");

  std::optional<double> budget_c, delta_c;
  CLI::App* lagrange = app.add_subcommand("lagrange-check", "multiplier vs envelope slope");
  add_model_options(lagrange);
  lagrange->add_option("--c", budget_c, "complexity budget g(w) <= c");
  lagrange->add_option("--delta-c", delta_c, "finite-difference half-step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config_file(config_path);

    if (seed) cfg.seed = *seed;
    if (output_dir) cfg.output_dir = *output_dir;
    if (data_path) cfg.dataset_path = *data_path;
    if (label) cfg.label_column = *label;
    if (loss_kind) cfg.loss_kind = *loss_kind;
    if (penalty_kind) cfg.penalty_kind = *penalty_kind;
    if (mix) cfg.elastic_mix = *mix;
    if (!weights.empty()) cfg.weighted_l2 = weights;
    if (intercept) cfg.intercept = *intercept;
    if (standardize_flag) cfg.standardize_features = *standardize_flag;
    if (lambda && gamma) throw ConfigError("--lambda and --gamma are mutually exclusive");
    if (lambda) {
      cfg.lambda = *lambda;
      cfg.cost_model.reset();
    }
    if (gamma) {
      cfg.cost_model = CostModel::scalar(*gamma);
      cfg.lambda.reset();
    }
    if (tune_method) cfg.tune_method = *tune_method;
    if (!tune_lambdas.empty()) cfg.grid_lambdas = tune_lambdas;
    if (tune_range) cfg.random_range = *tune_range;
    if (trials) cfg.trials = *trials;
    if (folds) cfg.folds = *folds;

    if (price || beta || alpha || theta || n_total || n0 || n1 || unit_fp_cost) {
      CampaignScenario s = cfg.scenario.value_or(CampaignScenario{});
      if (price) s.price = *price;
      if (beta) s.beta = *beta;
      if (alpha) s.alpha = *alpha;
      if (theta) s.theta = *theta;
      if (n_total) s.n_total = *n_total;
      if (n0) s.n_negative_pred = *n0;
      if (n1) s.n_positive_pred = *n1;
      if (unit_fp_cost) s.unit_fp_cost = *unit_fp_cost;
      cfg.scenario = s;
    }
    if (beta_range) cfg.beta_range = *beta_range;
    if (price_range) cfg.price_range = *price_range;
    if (resolution) cfg.resolution = *resolution;
    if (no_svg) cfg.emit_svg = false;
    if (gamma_low) cfg.gamma_low = *gamma_low;
    if (gamma_high) cfg.gamma_high = *gamma_high;
    if (budget_c) cfg.budget_c = *budget_c;
    if (delta_c) cfg.delta_c = *delta_c;

    if (train->parsed()) return run_train(cfg);
    if (tune->parsed()) return run_tune(cfg);
    if (profit->parsed()) return run_profit(cfg);
    if (contour->parsed()) return run_contour(cfg);
    if (regime->parsed()) return run_regime(cfg);
    if (lagrange->parsed()) return run_lagrange_check(cfg);
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
