#include "costreg/campaign.hpp"

#include <cmath>

#include "costreg/errors.hpp"

namespace costreg {

namespace {

bool probability(double p) { return p >= 0.0 && p <= 1.0; }

double profit_with_ml_at(const CampaignScenario& s, double beta, double price) {
  return s.n_positive_pred * (price * (1.0 - beta) - s.unit_fp_cost) -
         s.n_negative_pred * s.alpha * s.unit_fp_cost;
}

}  // namespace

void CampaignScenario::validate() const {
  if (n_total < 0.0 || n_negative_pred < 0.0 || n_positive_pred < 0.0)
    throw ConfigError("scenario counts must be nonnegative");
  if (std::abs(n_total - (n_negative_pred + n_positive_pred)) > 1e-9 * std::max(1.0, n_total))
    throw ConfigError("scenario requires n_total = n0 + n1");
  if (!probability(alpha) || !probability(beta) || !probability(theta))
    throw ConfigError("alpha, beta, theta must lie in [0,1]");
  if (unit_fp_cost < 0.0)
    throw ConfigError("unit_fp_cost must be nonnegative");
  if (price < unit_fp_cost)
    throw ConfigError("scenario requires price >= unit_fp_cost (opportunity cost A = C - B >= 0)");
}

double profit_without_ml(const CampaignScenario& s) {
  return s.n_total * (s.price * s.theta - s.unit_fp_cost);
}

double profit_with_ml(const CampaignScenario& s) {
  return profit_with_ml_at(s, s.beta, s.price);
}

ProfitReport is_ml_useful(const CampaignScenario& s) {
  ProfitReport r;
  r.profit_with_ml = profit_with_ml(s);
  r.profit_without_ml = profit_without_ml(s);
  r.differential = r.profit_with_ml - r.profit_without_ml;
  r.lhs = s.n_positive_pred * s.price * (1.0 - s.beta) +
          s.n_negative_pred * s.unit_fp_cost * (1.0 - s.alpha);
  r.rhs = s.n_total * s.price * s.theta;
  r.useful = r.lhs > r.rhs;
  r.forms_agree = r.useful == (r.profit_with_ml > r.profit_without_ml);
  return r;
}

std::optional<bool> precision_condition(const CampaignScenario& s) {
  const double revenue_per_target = s.price * (1.0 - s.beta);
  const double saving_per_skip = s.unit_fp_cost * (1.0 - s.alpha);
  const double tol = 1e-9 * std::max(s.price, s.unit_fp_cost);
  if (std::abs(revenue_per_target - saving_per_skip) > tol) return std::nullopt;
  return (1.0 - s.beta) > s.theta;
}

std::optional<double> break_even_price(const CampaignScenario& s, double beta) {
  if (!probability(beta)) throw ConfigError("beta must lie in [0,1]");
  const double denom = s.n_positive_pred * (1.0 - beta);
  if (!(denom > 0.0)) return std::nullopt;
  return s.unit_fp_cost * (s.n_positive_pred + s.n_negative_pred * s.alpha) / denom;
}

ProfitGrid contour_grid(const CampaignScenario& s, std::pair<double, double> beta_range,
                        std::pair<double, double> price_range, int resolution) {
  const auto [beta_lo, beta_hi] = beta_range;
  const auto [price_lo, price_hi] = price_range;
  if (resolution < 2) throw BadRange("contour resolution must be at least 2");
  if (!(0.0 < beta_lo && beta_lo < beta_hi && beta_hi < 1.0))
    throw BadRange("beta range must satisfy 0 < lo < hi < 1");
  if (!(0.0 < price_lo && price_lo < price_hi))
    throw BadRange("price range must satisfy 0 < lo < hi");

  ProfitGrid grid;
  grid.beta_axis.resize(resolution);
  grid.price_axis.resize(resolution);
  const double bstep = (beta_hi - beta_lo) / static_cast<double>(resolution - 1);
  const double pstep = (price_hi - price_lo) / static_cast<double>(resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    grid.beta_axis(i) = beta_lo + bstep * static_cast<double>(i);
    grid.price_axis(i) = price_lo + pstep * static_cast<double>(i);
  }
  // keep the endpoints exact
  grid.beta_axis(resolution - 1) = beta_hi;
  grid.price_axis(resolution - 1) = price_hi;

  grid.values.resize(resolution, resolution);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j)
      grid.values(i, j) = profit_with_ml_at(s, grid.beta_axis(i), grid.price_axis(j));
  return grid;
}

}  // namespace costreg
