#include "costreg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "costreg/errors.hpp"

namespace costreg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double soft_threshold(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

double stable_sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// Shared solve state: the design matrix carries the constant-1 intercept
// column as its last column; only the leading `penalized` coordinates
// enter g(w).
struct Context {
  const LossSpec& loss;
  const PenaltySpec& penalty;
  double lambda;
  const Dataset& data;
  Eigen::MatrixXd design;  // T x n
  Index n = 0;
  Index penalized = 0;

  Context(const LossSpec& l, const PenaltySpec& p, double lam, const Dataset& d)
      : loss(l), penalty(p), lambda(lam), data(d) {
    penalized = d.cols();
    n = l.coef_count(d.cols());
    design.resize(d.rows(), n);
    design.leftCols(penalized) = d.features;
    if (l.intercept) design.col(n - 1).setOnes();
  }

  double loss_at(const Eigen::VectorXd& w) const { return eval_loss(loss, w, data); }
  double penalty_at(const Eigen::VectorXd& w) const {
    return eval_penalty(penalty, w.head(penalized));
  }
  double objective_at(const Eigen::VectorXd& w) const {
    return loss_at(w) + lambda * penalty_at(w);
  }

  Fit make_fit(Eigen::VectorXd w, int iterations, bool converged) const {
    Fit f;
    f.loss_value = loss_at(w);
    f.penalty_value = penalty_at(w);
    f.objective = f.loss_value + lambda * f.penalty_value;
    f.lambda = lambda;
    f.iterations_used = iterations;
    f.converged = converged;
    f.w = std::move(w);
    return f;
  }
};

void trace_push(const SolveOptions& opts, double value) {
  if (opts.objective_trace) opts.objective_trace->push_back(value);
}

bool small_change(double before, double after, double tolerance) {
  return std::abs(before - after) <= tolerance * std::max(1.0, std::abs(before));
}

// --- closed forms -----------------------------------------------------

Fit least_squares(const Context& ctx, const SolveOptions&) {
  if (ctx.data.rows() < ctx.n)
    throw IllPosed("unpenalized least squares needs T >= coefficient count (" +
                   std::to_string(ctx.data.rows()) + " < " + std::to_string(ctx.n) + ")");
  Eigen::VectorXd w = ctx.design.colPivHouseholderQr().solve(ctx.data.labels);
  return ctx.make_fit(std::move(w), 1, true);
}

Fit ridge_closed_form(const Context& ctx, const SolveOptions&) {
  const double T = static_cast<double>(ctx.data.rows());
  Eigen::MatrixXd A = ctx.design.transpose() * ctx.design / T;
  for (Index j = 0; j < ctx.penalized; ++j) {
    const double dj =
        ctx.penalty.kind == PenaltyKind::WeightedL2 ? ctx.penalty.weights(j) : 1.0;
    A(j, j) += 2.0 * ctx.lambda * dj;
  }
  const Eigen::VectorXd b = ctx.design.transpose() * ctx.data.labels / T;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(A);
  Eigen::VectorXd w;
  if (ldlt.info() == Eigen::Success) {
    w = ldlt.solve(b);
  } else {
    w = A.colPivHouseholderQr().solve(b);
  }
  return ctx.make_fit(std::move(w), 1, true);
}

// --- cyclic coordinate descent ----------------------------------------

// Exact coordinate minimization for squared error; a majorized step with
// the 0.25*||x_j||^2/T curvature bound for logistic.
Fit coordinate_descent(const Context& ctx, const SolveOptions& opts) {
  const Index T = ctx.data.rows();
  const double Td = static_cast<double>(T);
  const bool logistic = ctx.loss.kind == LossKind::Logistic;

  const double mix = ctx.penalty.kind == PenaltyKind::L1 ? 1.0 : ctx.penalty.mix;
  const double l1 = ctx.lambda * mix;
  const double l2 = 2.0 * ctx.lambda * (1.0 - mix);

  Eigen::VectorXd q = ctx.design.colwise().squaredNorm() / Td;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(ctx.n);
  // SE keeps the residual y - Xw, logistic keeps the scores Xw.
  Eigen::VectorXd state = logistic ? Eigen::VectorXd::Zero(T).eval() : ctx.data.labels;

  double objective = ctx.objective_at(w);
  trace_push(opts, objective);

  int sweeps = 0;
  bool converged = false;
  while (sweeps < opts.max_iterations) {
    ++sweeps;
    for (Index j = 0; j < ctx.n; ++j) {
      double z;
      if (!logistic) {
        const double rho = ctx.design.col(j).dot(state) / Td + q(j) * w(j);
        if (j < ctx.penalized) {
          const double denom = q(j) + l2;
          z = denom > 0.0 ? soft_threshold(rho, l1) / denom : 0.0;
        } else {
          z = q(j) > 0.0 ? rho / q(j) : w(j);
        }
      } else {
        double grad = 0.0;
        for (Index t = 0; t < T; ++t) {
          const double y = ctx.data.labels(t);
          grad += -y * stable_sigmoid(-y * state(t)) * ctx.design(t, j);
        }
        grad /= Td;
        const double curvature = 0.25 * q(j);
        if (curvature <= 0.0) {
          z = j < ctx.penalized ? 0.0 : w(j);
        } else if (j < ctx.penalized) {
          z = soft_threshold(curvature * w(j) - grad, l1) / (curvature + l2);
        } else {
          z = w(j) - grad / curvature;
        }
      }
      if (z != w(j)) {
        state += (logistic ? 1.0 : -1.0) * (z - w(j)) * ctx.design.col(j);
        w(j) = z;
      }
    }
    const double next = ctx.objective_at(w);
    trace_push(opts, next);
    if (small_change(objective, next, opts.tolerance)) {
      objective = next;
      converged = true;
      break;
    }
    objective = next;
  }
  return ctx.make_fit(std::move(w), sweeps, converged);
}

// --- proximal gradient -------------------------------------------------

Fit prox_gradient(const Context& ctx, const SolveOptions& opts) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(ctx.n);
  double objective = ctx.objective_at(w);
  trace_push(opts, objective);

  double step = 1.0;
  int iterations = 0;
  bool converged = false;
  while (iterations < opts.max_iterations) {
    ++iterations;
    const Eigen::VectorXd grad = grad_loss(ctx.loss, w, ctx.data);
    const double f = ctx.loss_at(w);

    Eigen::VectorXd next;
    bool accepted = false;
    for (int bt = 0; bt < 100; ++bt) {
      Eigen::VectorXd v = w - step * grad;
      next = v;
      if (ctx.lambda > 0.0)
        next.head(ctx.penalized) =
            prox_penalty(ctx.penalty, v.head(ctx.penalized), step * ctx.lambda);
      const Eigen::VectorXd diff = next - w;
      const double fn = ctx.loss_at(next);
      if (fn <= f + grad.dot(diff) + diff.squaredNorm() / (2.0 * step) + 1e-12) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // Nonsmooth corner (hinge): keep the step only if the full
      // objective still goes down.
      if (ctx.objective_at(next) >= objective) break;
    }
    w = next;
    const double fn_obj = ctx.objective_at(w);
    trace_push(opts, fn_obj);
    const bool done = small_change(objective, fn_obj, opts.tolerance);
    objective = fn_obj;
    step = std::min(step * 1.5, 1e8);
    if (done) {
      converged = true;
      break;
    }
  }
  return ctx.make_fit(std::move(w), iterations, converged);
}

// --- L0: coordinate descent + local combinatorial search ----------------

using SupportMask = std::vector<bool>;

struct SupportFit {
  Eigen::VectorXd w;
  double objective = kInf;
  bool valid = false;
};

// Refits the smooth loss on the active columns (intercept always kept)
// by recursing into the unpenalized solve on a column-subset dataset.
SupportFit refit_support(const Context& ctx, const SupportMask& mask, const SolveOptions& opts);

// Hard-threshold coordinate descent: each step does the exact (or
// majorized, for logistic) 1-D minimization of loss + lambda*1[w_j != 0].
SupportMask l0_coordinate_descent(const Context& ctx, const SolveOptions& opts) {
  const Index T = ctx.data.rows();
  const double Td = static_cast<double>(T);
  const bool squared = ctx.loss.kind == LossKind::SquaredError;

  Eigen::VectorXd q = ctx.design.colwise().squaredNorm() / Td;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(ctx.n);
  Eigen::VectorXd state = squared ? ctx.data.labels : Eigen::VectorXd::Zero(T).eval();

  double objective = ctx.objective_at(w);
  for (int sweep = 0; sweep < std::min(opts.max_iterations, 500); ++sweep) {
    for (Index j = 0; j < ctx.n; ++j) {
      double z;
      double curvature;
      if (squared) {
        curvature = q(j);
        const double rho = ctx.design.col(j).dot(state) / Td + q(j) * w(j);
        z = curvature > 0.0 ? rho / curvature : 0.0;
      } else {
        curvature = 0.25 * q(j);
        double grad = 0.0;
        for (Index t = 0; t < T; ++t) {
          const double y = ctx.data.labels(t);
          const double dl = ctx.loss.kind == LossKind::Logistic
                                ? -y * stable_sigmoid(-y * state(t))
                                : ((1.0 - y * state(t)) > 0.0 ? -y : 0.0);
          grad += dl * ctx.design(t, j);
        }
        grad /= Td;
        z = curvature > 0.0 ? w(j) - grad / curvature : 0.0;
      }
      if (j < ctx.penalized && curvature > 0.0) {
        // keep the coordinate only if the smooth gain covers lambda
        if (curvature * z * z / 2.0 < ctx.lambda) z = 0.0;
      }
      if (j >= ctx.penalized && curvature <= 0.0) z = w(j);
      if (z != w(j)) {
        state += (squared ? -1.0 : 1.0) * (z - w(j)) * ctx.design.col(j);
        w(j) = z;
      }
    }
    const double next = ctx.objective_at(w);
    if (small_change(objective, next, opts.tolerance)) break;
    objective = next;
  }

  SupportMask mask(static_cast<std::size_t>(ctx.penalized), false);
  for (Index j = 0; j < ctx.penalized; ++j) mask[static_cast<std::size_t>(j)] = w(j) != 0.0;
  return mask;
}

// Exact 1-D minimizer over the intercept for an empty support; ternary
// search is enough since every loss here is convex in the score offset.
double fit_intercept_only(const Context& ctx) {
  if (ctx.loss.kind == LossKind::SquaredError) return ctx.data.labels.mean();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(ctx.n);
  auto value = [&](double b) {
    w(ctx.n - 1) = b;
    return ctx.loss_at(w);
  };
  double lo = -30.0, hi = 30.0;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (value(m1) <= value(m2))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

SupportFit refit_support(const Context& ctx, const SupportMask& mask, const SolveOptions& opts) {
  std::vector<Index> active;
  for (Index j = 0; j < ctx.penalized; ++j)
    if (mask[static_cast<std::size_t>(j)]) active.push_back(j);

  if (active.empty()) {
    SupportFit out;
    out.w = Eigen::VectorXd::Zero(ctx.n);
    if (ctx.loss.intercept) out.w(ctx.n - 1) = fit_intercept_only(ctx);
    out.objective = ctx.objective_at(out.w);
    out.valid = true;
    return out;
  }

  Dataset sub;
  sub.labels = ctx.data.labels;
  sub.features.resize(ctx.data.rows(), static_cast<Index>(active.size()));
  for (Index k = 0; k < static_cast<Index>(active.size()); ++k)
    sub.features.col(k) = ctx.data.features.col(active[static_cast<std::size_t>(k)]);

  SolveOptions inner = opts;
  inner.objective_trace = nullptr;
  inner.algorithm = SolveAlgorithm::Auto;

  SupportFit out;
  Eigen::VectorXd sub_w;
  try {
    Fit f = solve_penalized(ctx.loss, PenaltySpec::l2(), 0.0, sub, inner);
    sub_w = std::move(f.w);
  } catch (const NumericError&) {
    return out;  // support too large for the data; skip
  }

  out.w = Eigen::VectorXd::Zero(ctx.n);
  for (Index k = 0; k < static_cast<Index>(active.size()); ++k)
    out.w(active[static_cast<std::size_t>(k)]) = sub_w(k);
  if (ctx.loss.intercept) out.w(ctx.n - 1) = sub_w(sub_w.size() - 1);
  out.objective = ctx.objective_at(out.w);
  out.valid = true;
  return out;
}

Fit l0_search(const Context& ctx, const SolveOptions& opts) {
  const Index np = ctx.penalized;
  std::map<SupportMask, SupportFit> memo;
  int evaluations = 0;

  auto evaluate = [&](const SupportMask& mask) -> const SupportFit& {
    auto it = memo.find(mask);
    if (it == memo.end()) {
      ++evaluations;
      it = memo.emplace(mask, refit_support(ctx, mask, opts)).first;
    }
    return it->second;
  };

  SupportFit best;
  auto consider = [&](const SupportFit& f) {
    if (f.valid && f.objective < best.objective) best = f;
  };

  auto local_search = [&](SupportMask mask) {
    SupportFit current = evaluate(mask);
    if (!current.valid) return;
    bool improved = true;
    int guard = 0;
    while (improved && guard++ < 4 * static_cast<int>(np) * static_cast<int>(np) + 16) {
      improved = false;
      SupportMask best_move;
      double best_obj = current.objective;
      auto try_mask = [&](const SupportMask& m) {
        const SupportFit& f = evaluate(m);
        if (f.valid && f.objective < best_obj - 1e-12) {
          best_obj = f.objective;
          best_move = m;
        }
      };
      for (Index j = 0; j < np; ++j) {  // add / drop
        SupportMask m = mask;
        m[static_cast<std::size_t>(j)] = !m[static_cast<std::size_t>(j)];
        try_mask(m);
      }
      for (Index i = 0; i < np; ++i) {  // swap one in, one out
        if (!mask[static_cast<std::size_t>(i)]) continue;
        for (Index j = 0; j < np; ++j) {
          if (mask[static_cast<std::size_t>(j)]) continue;
          SupportMask m = mask;
          m[static_cast<std::size_t>(i)] = false;
          m[static_cast<std::size_t>(j)] = true;
          try_mask(m);
        }
      }
      if (!best_move.empty()) {
        mask = best_move;
        current = evaluate(mask);
        improved = true;
      }
    }
    consider(current);
  };

  // Deterministic starts: empty, full, and the hard-threshold CD support.
  local_search(SupportMask(static_cast<std::size_t>(np), false));
  local_search(SupportMask(static_cast<std::size_t>(np), true));
  local_search(l0_coordinate_descent(ctx, opts));

  // Seeded random restarts across support sizes.
  std::mt19937_64 gen(opts.seed);
  const int restarts = std::min<int>(3 * static_cast<int>(np) + 4, 64);
  std::vector<Index> order(static_cast<std::size_t>(np));
  for (Index j = 0; j < np; ++j) order[static_cast<std::size_t>(j)] = j;
  for (int r = 0; r < restarts; ++r) {
    const Index size = np > 0 ? static_cast<Index>(1 + gen() % static_cast<std::uint64_t>(np)) : 0;
    for (std::size_t i = order.size() - 1; i > 0; --i)
      std::swap(order[i], order[gen() % (i + 1)]);
    SupportMask mask(static_cast<std::size_t>(np), false);
    for (Index k = 0; k < size; ++k) mask[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = true;
    local_search(mask);
  }

  if (!best.valid)
    throw IllPosed("no L0 support admits a refit on this dataset");
  return ctx.make_fit(std::move(best.w), evaluations, true);
}

// --- dispatch -----------------------------------------------------------

void validate_common(const LossSpec& loss, const PenaltySpec& penalty, const Dataset& d) {
  if (d.rows() < 1 || d.cols() < 1)
    throw DimensionMismatch("dataset must have at least one row and one feature");
  if (d.labels.size() != d.rows())
    throw DimensionMismatch("labels length does not match row count");
  if (penalty.kind == PenaltyKind::WeightedL2 && penalty.weights.size() != d.cols())
    throw DimensionMismatch("weighted_l2 has " + std::to_string(penalty.weights.size()) +
                            " weights for " + std::to_string(d.cols()) + " features");
  (void)loss;
}

}  // namespace

Fit solve_penalized(const LossSpec& loss, const PenaltySpec& penalty, double lambda,
                    const Dataset& d, const SolveOptions& opts) {
  if (!(lambda >= 0.0)) throw ConfigError("lambda must be nonnegative");
  if (opts.max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
  if (!(opts.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  validate_common(loss, penalty, d);

  Context ctx(loss, penalty, lambda, d);

  switch (opts.algorithm) {
    case SolveAlgorithm::ClosedForm:
      if (loss.kind != LossKind::SquaredError ||
          (penalty.kind != PenaltyKind::L2 && penalty.kind != PenaltyKind::WeightedL2))
        throw ConfigError("closed form requires squared loss with an L2-family penalty");
      return lambda == 0.0 ? least_squares(ctx, opts) : ridge_closed_form(ctx, opts);
    case SolveAlgorithm::CoordinateDescent:
      if (penalty.kind == PenaltyKind::L0 || penalty.kind == PenaltyKind::WeightedL2 ||
          loss.kind == LossKind::Hinge)
        throw ConfigError("coordinate descent requires L1/L2-mixable penalty and smooth loss");
      return coordinate_descent(ctx, opts);
    case SolveAlgorithm::ProxGradient:
      return prox_gradient(ctx, opts);
    case SolveAlgorithm::Auto:
      break;
  }

  if (lambda == 0.0) {
    if (loss.kind == LossKind::SquaredError) {
      if (d.rows() < ctx.n)
        throw IllPosed("lambda = 0 with squared loss requires T >= coefficient count");
      return least_squares(ctx, opts);
    }
    return prox_gradient(ctx, opts);
  }

  switch (penalty.kind) {
    case PenaltyKind::L2:
    case PenaltyKind::WeightedL2:
      if (loss.kind == LossKind::SquaredError) return ridge_closed_form(ctx, opts);
      return prox_gradient(ctx, opts);
    case PenaltyKind::L1:
    case PenaltyKind::ElasticNet:
      if (loss.kind == LossKind::SquaredError || loss.kind == LossKind::Logistic)
        return coordinate_descent(ctx, opts);
      return prox_gradient(ctx, opts);
    case PenaltyKind::L0:
      return l0_search(ctx, opts);
  }
  return prox_gradient(ctx, opts);
}

Fit solve_cost_scaled(const LossSpec& loss, const PenaltySpec& penalty, double gamma,
                      const Dataset& d, const SolveOptions& opts) {
  if (!(gamma > 0.0)) throw ConfigError("gamma must be positive");
  Fit fit = solve_penalized(loss, penalty, 1.0 / gamma, d, opts);
  fit.loss_value *= gamma;
  fit.penalty_value *= gamma;
  fit.objective = fit.loss_value + fit.lambda * fit.penalty_value;
  return fit;
}

ConstrainedFit solve_constrained(const LossSpec& loss, const PenaltySpec& penalty, double c,
                                 const Dataset& d, const SolveOptions& opts) {
  if (!(c > 0.0)) throw ConfigError("constraint budget c must be positive");
  if (penalty.kind == PenaltyKind::L0)
    throw UnsupportedPenalty("the L0 constraint set is non-convex; use a convex penalty");
  validate_common(loss, penalty, d);

  SolveOptions inner = opts;
  inner.objective_trace = nullptr;

  // Unconstrained minimizer feasible -> multiplier 0.
  bool have_unconstrained = true;
  Fit unconstrained;
  try {
    unconstrained = solve_penalized(loss, penalty, 0.0, d, inner);
  } catch (const IllPosed&) {
    have_unconstrained = false;
  }
  if (have_unconstrained && unconstrained.penalty_value <= c) {
    ConstrainedFit out;
    out.fit = std::move(unconstrained);
    out.c = c;
    out.multiplier = 0.0;
    out.constraint_active = false;
    return out;
  }

  // Bracket: find hi with g(w*(hi)) <= c. For penalties with an L1 part
  // the full-shrinkage lambda gives g = 0 immediately.
  const double mix = penalty.kind == PenaltyKind::L1
                         ? 1.0
                         : (penalty.kind == PenaltyKind::ElasticNet ? penalty.mix : 0.0);
  double hi;
  if (mix > 0.0) {
    LossSpec ls = loss;
    Context probe(ls, penalty, 0.0, d);
    const Eigen::VectorXd g0 = grad_loss(loss, Eigen::VectorXd::Zero(probe.n), d);
    hi = g0.head(probe.penalized).cwiseAbs().maxCoeff() / mix + 1.0;
  } else {
    hi = 1.0;
  }
  Fit fit_hi = solve_penalized(loss, penalty, hi, d, inner);
  int doublings = 0;
  while (fit_hi.penalty_value > c) {
    hi *= 2.0;
    if (++doublings > 80)
      throw NotConverged("could not bracket the constraint with a finite multiplier");
    fit_hi = solve_penalized(loss, penalty, hi, d, inner);
  }

  double lo = 0.0;  // g(w*(lo)) > c
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-11 * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    Fit fit_mid = solve_penalized(loss, penalty, mid, d, inner);
    if (fit_mid.penalty_value <= c) {
      hi = mid;
      fit_hi = std::move(fit_mid);
    } else {
      lo = mid;
    }
  }

  ConstrainedFit out;
  out.c = c;
  out.multiplier = hi;
  out.constraint_active = true;
  const bool on_boundary = (c - fit_hi.penalty_value) <= 1e-6 * std::max(1.0, c);
  if (!on_boundary) fit_hi.converged = false;
  out.fit = std::move(fit_hi);
  return out;
}

}  // namespace costreg
