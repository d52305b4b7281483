#ifndef COSTREG_CAMPAIGN_HPP
#define COSTREG_CAMPAIGN_HPP

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "costreg/dataset.hpp"

namespace costreg {

// Campaign profitability calculus for a targeted-recommendation setting.
//
// Quantities: N customers scored out of sample, of which n_positive_pred
// are recommended to (predicted positive) and n_negative_pred are not.
// alpha is the false-negative probability, beta the false-positive
// probability, theta the acceptance probability of a blanket (non-ML)
// recommendation. Each recommendation costs unit_fp_cost (B) and each
// acquired customer brings price (C); the foregone-profit of a miss is
// the derived opportunity_cost A = C - B.
struct CampaignScenario {
  double n_total = 0.0;          // N
  double n_negative_pred = 0.0;  // N0
  double n_positive_pred = 0.0;  // N1
  double alpha = 0.0;
  double beta = 0.0;
  double theta = 0.0;
  double unit_fp_cost = 0.0;  // B
  double price = 0.0;         // C

  double opportunity_cost() const { return price - unit_fp_cost; }  // A

  // Throws ConfigError unless N = N0 + N1, probabilities lie in [0,1],
  // and price >= unit_fp_cost >= 0.
  void validate() const;

  CampaignScenario with(double new_beta, double new_price) const {
    CampaignScenario s = *this;
    s.beta = new_beta;
    s.price = new_price;
    return s;
  }
};

struct ProfitReport {
  double profit_with_ml = 0.0;
  double profit_without_ml = 0.0;
  double differential = 0.0;  // with - without
  double lhs = 0.0;           // N1*C*(1-beta) + N0*B*(1-alpha)
  double rhs = 0.0;           // N*C*theta
  bool useful = false;        // lhs > rhs, strictly
  bool forms_agree = false;   // useful == (profit_with_ml > profit_without_ml)
};

// Row index runs over beta, column index over price.
struct ProfitGrid {
  Eigen::VectorXd beta_axis;
  Eigen::VectorXd price_axis;
  Eigen::MatrixXd values;
};

// Blanket strategy: recommend to everyone. Profit N*(C*theta - B).
double profit_without_ml(const CampaignScenario& s);

// Targeted strategy: N1*(C*(1-beta) - B) - N0*alpha*B.
double profit_with_ml(const CampaignScenario& s);

// Evaluates both decision forms; `useful` uses the revenue-vs-blanket
// inequality strictly, and forms_agree records that the direct profit
// comparison reaches the same verdict.
ProfitReport is_ml_useful(const CampaignScenario& s);

// Applicable only when expected revenue per targeted customer equals the
// expected saving per non-targeted one, C(1-beta) = B(1-alpha); then ML
// is useful exactly when its precision 1-beta beats theta.
std::optional<bool> precision_condition(const CampaignScenario& s);

// Price where targeted profit crosses zero for the given beta:
// C* = B*(N1 + N0*alpha) / (N1*(1-beta)); absent when the denominator
// is not positive.
std::optional<double> break_even_price(const CampaignScenario& s, double beta);

// Profit surface over the axis product. Axis endpoints are included;
// requires 0 < beta range < 1 and price range > 0 so the surface is
// strictly monotone in both directions. Grid cells substitute (beta,
// price) into the profit formula directly, so prices below unit_fp_cost
// may be explored even though a base scenario would reject them.
ProfitGrid contour_grid(const CampaignScenario& s, std::pair<double, double> beta_range,
                        std::pair<double, double> price_range, int resolution);

}  // namespace costreg

#endif  // COSTREG_CAMPAIGN_HPP
