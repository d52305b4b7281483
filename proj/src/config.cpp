#include "costreg/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "costreg/errors.hpp"

namespace costreg {

namespace {

using nlohmann::json;

std::pair<double, double> range_from(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 2)
    throw ConfigError(key + " must be a [lower, upper] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

CostModel cost_model_from_json(const json& j) {
  const std::string form = j.at("form").get<std::string>();
  const std::string currency = j.value("currency", std::string{});
  if (form == "scalar") return CostModel::scalar(j.at("gamma").get<double>(), currency);
  if (form == "binary")
    return CostModel::binary(j.at("gamma_fp").get<double>(), j.at("gamma_fn").get<double>(),
                             currency);
  if (form == "matrix") {
    const json& e = j.at("entries");
    Eigen::MatrixXd entries;
    if (e.is_array() && !e.empty() && e[0].is_array()) {
      const Index k = static_cast<Index>(e.size());
      entries.resize(k, k);
      for (Index i = 0; i < k; ++i) {
        if (static_cast<Index>(e[static_cast<std::size_t>(i)].size()) != k)
          throw ConfigError("cost matrix rows must all have length k");
        for (Index c = 0; c < k; ++c)
          entries(i, c) = e[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].get<double>();
      }
    } else {
      // row-major flat array with an explicit class count
      const Index k = j.at("k").get<Index>();
      if (static_cast<Index>(e.size()) != k * k)
        throw ConfigError("flat cost matrix must have k*k entries");
      entries.resize(k, k);
      for (Index i = 0; i < k; ++i)
        for (Index c = 0; c < k; ++c)
          entries(i, c) = e[static_cast<std::size_t>(i * k + c)].get<double>();
    }
    return CostModel::matrix(std::move(entries), currency);
  }
  if (form == "unquantifiable") return CostModel::unquantifiable();
  if (form == "negligible") return CostModel::negligible();
  throw ConfigError("unknown cost model form: \"" + form + "\"");
}

CampaignScenario scenario_from_json(const json& j) {
  CampaignScenario s;
  s.n_total = j.at("n_total").get<double>();
  s.n_negative_pred = j.at("n0").get<double>();
  s.n_positive_pred = j.at("n1").get<double>();
  s.alpha = j.at("alpha").get<double>();
  s.beta = j.at("beta").get<double>();
  s.theta = j.at("theta").get<double>();
  s.unit_fp_cost = j.at("unit_fp_cost").get<double>();
  s.price = j.at("price").get<double>();
  return s;
}

void merge(RunConfig& cfg, const json& j) {
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();

  if (j.contains("data")) {
    const json& d = j["data"];
    if (d.contains("path")) cfg.dataset_path = d["path"].get<std::string>();
    if (d.contains("label")) cfg.label_column = d["label"].get<std::string>();
    if (d.contains("standardize")) cfg.standardize_features = d["standardize"].get<bool>();
  }
  if (j.contains("loss")) {
    const json& l = j["loss"];
    if (l.contains("kind")) cfg.loss_kind = l["kind"].get<std::string>();
    if (l.contains("intercept")) cfg.intercept = l["intercept"].get<bool>();
  }
  if (j.contains("penalty")) {
    const json& p = j["penalty"];
    if (p.contains("kind")) cfg.penalty_kind = p["kind"].get<std::string>();
    if (p.contains("mix")) cfg.elastic_mix = p["mix"].get<double>();
    if (p.contains("weights")) cfg.weighted_l2 = p["weights"].get<std::vector<double>>();
  }
  if (j.contains("lambda")) cfg.lambda = j["lambda"].get<double>();
  if (j.contains("cost_model")) cfg.cost_model = cost_model_from_json(j["cost_model"]);
  if (j.contains("priors")) cfg.priors = j["priors"].get<std::vector<double>>();
  if (j.contains("scenario")) cfg.scenario = scenario_from_json(j["scenario"]);

  if (j.contains("tuning")) {
    const json& t = j["tuning"];
    if (t.contains("method")) cfg.tune_method = t["method"].get<std::string>();
    if (t.contains("lambdas")) cfg.grid_lambdas = t["lambdas"].get<std::vector<double>>();
    if (t.contains("range")) cfg.random_range = range_from(t["range"], "tuning.range");
    if (t.contains("trials")) cfg.trials = t["trials"].get<int>();
    if (t.contains("folds")) cfg.folds = t["folds"].get<int>();
  }
  if (j.contains("regime")) {
    const json& r = j["regime"];
    if (r.contains("gamma_low")) cfg.gamma_low = r["gamma_low"].get<double>();
    if (r.contains("gamma_high")) cfg.gamma_high = r["gamma_high"].get<double>();
  }
  if (j.contains("contour")) {
    const json& c = j["contour"];
    if (c.contains("beta_range")) cfg.beta_range = range_from(c["beta_range"], "contour.beta_range");
    if (c.contains("price_range"))
      cfg.price_range = range_from(c["price_range"], "contour.price_range");
    if (c.contains("resolution")) cfg.resolution = c["resolution"].get<int>();
    if (c.contains("svg")) cfg.emit_svg = c["svg"].get<bool>();
  }
  if (j.contains("constraint")) {
    const json& c = j["constraint"];
    if (c.contains("c")) cfg.budget_c = c["c"].get<double>();
    if (c.contains("delta_c")) cfg.delta_c = c["delta_c"].get<double>();
  }
  if (j.contains("solver")) {
    const json& s = j["solver"];
    if (s.contains("max_iterations")) cfg.solve.max_iterations = s["max_iterations"].get<int>();
    if (s.contains("tolerance")) cfg.solve.tolerance = s["tolerance"].get<double>();
  }
}

}  // namespace

LossSpec RunConfig::make_loss() const {
  LossSpec spec;
  spec.kind = loss_kind_from_name(loss_kind);
  spec.intercept = intercept;
  return spec;
}

PenaltySpec RunConfig::make_penalty() const {
  const PenaltyKind kind = penalty_kind_from_name(penalty_kind);
  switch (kind) {
    case PenaltyKind::ElasticNet:
      return PenaltySpec::elastic_net(elastic_mix);
    case PenaltyKind::WeightedL2: {
      Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(
          weighted_l2.data(), static_cast<Index>(weighted_l2.size()));
      return PenaltySpec::weighted_l2(w);
    }
    case PenaltyKind::L0:
      return PenaltySpec::l0();
    case PenaltyKind::L1:
      return PenaltySpec::l1();
    case PenaltyKind::L2:
      break;
  }
  return PenaltySpec::l2();
}

ClassPriors RunConfig::make_priors() const {
  if (priors) return ClassPriors::from(*priors);
  const Index k = cost_model ? std::max<Index>(cost_model->classes(), 1) : 1;
  return ClassPriors::uniform(k);
}

RunConfig load_config_file(const std::string& path) {
  RunConfig cfg;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  merge_config_json(cfg, buffer.str(), path);
  return cfg;
}

void merge_config_json(RunConfig& cfg, const std::string& json_text, const std::string& origin) {
  json parsed;
  try {
    parsed = json::parse(json_text);
    merge(cfg, parsed);
  } catch (const json::exception& e) {
    throw ConfigError("invalid config (" + origin + "): " + e.what());
  }
}

}  // namespace costreg
