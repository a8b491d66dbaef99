#include "ulinf/competitors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ulinf/optimize.hpp"
#include "ulinf/special_fn.hpp"

namespace ulinf {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_unit(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::domain_error(std::string(name) + " must be in [0,1]");
  }
}

void check_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(name) + " must be positive and finite");
  }
}

double log_or_neg_inf(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

double beta_interior_loglik(double a, double b, double nc, double sum_log_y,
                            double sum_log1m_y) {
  return (a - 1.0) * sum_log_y + (b - 1.0) * sum_log1m_y -
         nc * (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double kuma_interior_loglik(double a, double b, double nc, double sum_log_y,
                            const std::vector<double>& interior) {
  double sum_log1m_ya = 0.0;
  for (const double y : interior) {
    sum_log1m_ya += std::log1p(-std::pow(y, a));
  }
  return nc * std::log(a) + nc * std::log(b) + (a - 1.0) * sum_log_y +
         (b - 1.0) * sum_log1m_ya;
}

// Closed-form discrete part shared by all three inflated models, plus
// boundary-aware standard errors and Wald intervals.
void fill_discrete_part(FitResult& fit, const PartitionedSample& sample,
                        const char* mix_name, const char* one_name,
                        double level) {
  const double dn = static_cast<double>(sample.n);
  const double mix = static_cast<double>(sample.t1) / dn;
  const double one =
      sample.t1 == 0 ? 0.0
                     : static_cast<double>(sample.t2) / static_cast<double>(sample.t1);
  fit.estimates[mix_name] = mix;
  fit.estimates[one_name] = one;

  const double z = norm_quantile(0.5 * (1.0 + level));
  if (mix > 0.0 && mix < 1.0) {
    const double se = std::sqrt(mix * (1.0 - mix) / dn);
    fit.std_errors[mix_name] = se;
    fit.conf_intervals[mix_name] = {std::max(0.0, mix - z * se),
                                    std::min(1.0, mix + z * se)};
    if (one > 0.0 && one < 1.0) {
      const double se_one = std::sqrt(one * (1.0 - one) / (dn * mix));
      fit.std_errors[one_name] = se_one;
      fit.conf_intervals[one_name] = {std::max(0.0, one - z * se_one),
                                      std::min(1.0, one + z * se_one)};
    }
  }
}

double discrete_loglik(const PartitionedSample& sample) {
  const double mix = static_cast<double>(sample.t1) / static_cast<double>(sample.n);
  const double one =
      sample.t1 == 0 ? 0.0
                     : static_cast<double>(sample.t2) / static_cast<double>(sample.t1);
  return loglik_alpha(mix, sample) + loglik_p(one, sample);
}

// Shape standard errors and intervals from the finite-difference observed
// information of the interior log-likelihood (2x2 inverse).
void fill_shape_errors(FitResult& fit, const char* a_name, const char* b_name,
                       double a_hat, double b_hat,
                       const std::function<double(std::span<const double>)>& ll,
                       double level) {
  const std::array<double, 2> at{a_hat, b_hat};
  const auto hess = fd_hessian(ll, at);
  const double haa = -hess[0][0];
  const double hbb = -hess[1][1];
  const double hab = -hess[0][1];
  const double det = haa * hbb - hab * hab;
  if (!(det > 0.0) || !(haa > 0.0)) return;  // not a usable curvature
  const double var_a = hbb / det;
  const double var_b = haa / det;
  if (!(var_a > 0.0) || !(var_b > 0.0)) return;
  const double z = norm_quantile(0.5 * (1.0 + level));
  const double se_a = std::sqrt(var_a);
  const double se_b = std::sqrt(var_b);
  fit.std_errors[a_name] = se_a;
  fit.std_errors[b_name] = se_b;
  fit.conf_intervals[a_name] = {std::max(0.0, a_hat - z * se_a), a_hat + z * se_a};
  fit.conf_intervals[b_name] = {std::max(0.0, b_hat - z * se_b), b_hat + z * se_b};
}

}  // namespace

BeinfParams::BeinfParams(double alpha, double gamma, double a, double b)
    : alpha(alpha), gamma(gamma), a(a), b(b) {
  check_unit(alpha, "BeinfParams: alpha");
  check_unit(gamma, "BeinfParams: gamma");
  check_positive(a, "BeinfParams: a");
  check_positive(b, "BeinfParams: b");
}

ZoikParams::ZoikParams(double lambda, double p, double a, double b)
    : lambda(lambda), p(p), a(a), b(b) {
  check_unit(lambda, "ZoikParams: lambda");
  check_unit(p, "ZoikParams: p");
  check_positive(a, "ZoikParams: a");
  check_positive(b, "ZoikParams: b");
}

double beinf_logpdf(const UlinfPoint& point, const BeinfParams& params) {
  switch (point.kind) {
    case UlinfPoint::Kind::AtZero:
      return log_or_neg_inf(params.alpha * (1.0 - params.gamma));
    case UlinfPoint::Kind::AtOne:
      return log_or_neg_inf(params.alpha * params.gamma);
    case UlinfPoint::Kind::Interior: {
      if (params.alpha == 1.0) return kNegInf;
      const double y = point.y;
      return std::log1p(-params.alpha) + (params.a - 1.0) * std::log(y) +
             (params.b - 1.0) * std::log1p(-y) -
             (std::lgamma(params.a) + std::lgamma(params.b) -
              std::lgamma(params.a + params.b));
    }
  }
  return kNegInf;
}

double zoik_logpdf(const UlinfPoint& point, const ZoikParams& params) {
  switch (point.kind) {
    case UlinfPoint::Kind::AtZero:
      return log_or_neg_inf(params.lambda * (1.0 - params.p));
    case UlinfPoint::Kind::AtOne:
      return log_or_neg_inf(params.lambda * params.p);
    case UlinfPoint::Kind::Interior: {
      if (params.lambda == 1.0) return kNegInf;
      const double y = point.y;
      return std::log1p(-params.lambda) + std::log(params.a) +
             std::log(params.b) + (params.a - 1.0) * std::log(y) +
             (params.b - 1.0) * std::log1p(-std::pow(y, params.a));
    }
  }
  return kNegInf;
}

double beinf_cdf(double y, const BeinfParams& params) {
  if (y < 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  return params.alpha * (1.0 - params.gamma) +
         (1.0 - params.alpha) * reg_inc_beta(y, params.a, params.b);
}

double zoik_cdf(double y, const ZoikParams& params) {
  if (y < 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  const double kuma = 1.0 - std::pow(1.0 - std::pow(y, params.a), params.b);
  return params.lambda * (1.0 - params.p) + (1.0 - params.lambda) * kuma;
}

FitResult beinf_fit(const PartitionedSample& sample, double level) {
  if (sample.n == 0) throw FitError("beinf_fit: empty sample");
  const std::size_t nc_count = sample.interior_count();
  if (nc_count < 2) {
    throw FitError("beinf_fit: needs at least 2 interior observations, got " +
                   std::to_string(nc_count));
  }
  const double nc = static_cast<double>(nc_count);
  double sum_log_y = 0.0;
  for (const double y : sample.interior) sum_log_y += std::log(y);
  const double sum_log1m_y = sample.sum_log1m;

  // Method-of-moments start for the beta shapes.
  double mean = 0.0;
  for (const double y : sample.interior) mean += y;
  mean /= nc;
  double var = 0.0;
  for (const double y : sample.interior) var += (y - mean) * (y - mean);
  var /= nc;
  double a = 1.0, b = 1.0;
  if (var > 0.0 && var < mean * (1.0 - mean)) {
    const double scale = mean * (1.0 - mean) / var - 1.0;
    a = mean * scale;
    b = (1.0 - mean) * scale;
  }

  // Newton iteration on the score equations; digamma/trigamma are exact, so
  // convergence is quadratic from the moment start.
  bool newton_ok = false;
  int newton_iters = 0;
  for (; newton_iters < 500; ++newton_iters) {
    const double psi_ab = digamma(a + b);
    const double score_a = nc * (psi_ab - digamma(a)) + sum_log_y;
    const double score_b = nc * (psi_ab - digamma(b)) + sum_log1m_y;
    if (std::max(std::abs(score_a), std::abs(score_b)) < 1e-10) {
      newton_ok = true;
      break;
    }
    const double tri_ab = trigamma(a + b);
    const double haa = nc * (tri_ab - trigamma(a));
    const double hbb = nc * (tri_ab - trigamma(b));
    const double hab = nc * tri_ab;
    const double det = haa * hbb - hab * hab;
    if (det == 0.0 || !std::isfinite(det)) break;
    double da = -(hbb * score_a - hab * score_b) / det;
    double db = -(haa * score_b - hab * score_a) / det;
    // halve the step until it stays in the positive quadrant
    double damp = 1.0;
    while ((a + damp * da <= 0.0 || b + damp * db <= 0.0) && damp > 1e-8) {
      damp *= 0.5;
    }
    a += damp * da;
    b += damp * db;
    if (!std::isfinite(a) || !std::isfinite(b)) break;
    if (std::max(std::abs(damp * da), std::abs(damp * db)) < 1e-14) {
      newton_ok = true;
      break;
    }
  }

  const auto interior_ll = [&](std::span<const double> x) {
    if (x[0] <= 0.0 || x[1] <= 0.0) return -1e100;
    return beta_interior_loglik(x[0], x[1], nc, sum_log_y, sum_log1m_y);
  };

  if (!newton_ok) {
    const std::array<double, 2> start{std::max(a, 1e-3), std::max(b, 1e-3)};
    const OptimumND opt = nelder_mead(interior_ll, start);
    if (!opt.converged) {
      throw FitError(
          "beinf_fit: shape optimization did not converge (Newton " +
          std::to_string(newton_iters) + " iterations, Nelder-Mead " +
          std::to_string(opt.iterations) + " iterations, best (a,b) = (" +
          std::to_string(opt.x[0]) + ", " + std::to_string(opt.x[1]) + "))");
    }
    a = opt.x[0];
    b = opt.x[1];
  }

  FitResult fit;
  fit.model = Model::BEINF;
  fit.n = sample.n;
  fit.param_count = 4;
  fit.level = level;
  fill_discrete_part(fit, sample, "alpha", "gamma", level);
  fit.estimates["a"] = a;
  fit.estimates["b"] = b;
  fit.derived = {{"mu", a / (a + b)}, {"phi", a + b}};

  const auto safe_ll = [&](std::span<const double> x) {
    return beta_interior_loglik(x[0], x[1], nc, sum_log_y, sum_log1m_y);
  };
  fill_shape_errors(fit, "a", "b", a, b, safe_ll, level);

  fit.loglik = discrete_loglik(sample) +
               beta_interior_loglik(a, b, nc, sum_log_y, sum_log1m_y);
  fit.aic = -2.0 * fit.loglik + 2.0 * 4.0;
  fit.bic = -2.0 * fit.loglik + 4.0 * std::log(static_cast<double>(sample.n));
  return fit;
}

FitResult zoik_fit(const PartitionedSample& sample, double level) {
  if (sample.n == 0) throw FitError("zoik_fit: empty sample");
  const std::size_t nc_count = sample.interior_count();
  if (nc_count < 2) {
    throw FitError("zoik_fit: needs at least 2 interior observations, got " +
                   std::to_string(nc_count));
  }
  const double nc = static_cast<double>(nc_count);
  double sum_log_y = 0.0;
  for (const double y : sample.interior) sum_log_y += std::log(y);

  // For fixed a the b-score has the closed-form root
  // b(a) = -nc / sum(ln(1 - y^a)); profile the likelihood over ln(a).
  const auto b_given_a = [&](double a) {
    double s = 0.0;
    for (const double y : sample.interior) s += std::log1p(-std::pow(y, a));
    return -nc / s;
  };
  const auto profile_ll = [&](double log_a) {
    const double a = std::exp(log_a);
    const double b = b_given_a(a);
    return kuma_interior_loglik(a, b, nc, sum_log_y, sample.interior);
  };

  const double lo = std::log(1e-3);
  const double hi = std::log(1e3);
  const OptimSettings settings{.max_iter = 500, .x_tol = 1e-10, .f_tol = 1e-12};
  const Optimum1D opt = maximize_1d(profile_ll, lo, hi, settings);
  if (!opt.converged) {
    throw FitError("zoik_fit: profile search did not converge after " +
                   std::to_string(opt.iterations) + " iterations");
  }
  // A maximizer pressed against the bracket means the optimum lies outside
  // the searched shape range.
  const double margin = 1e-6;
  if (opt.x <= lo + margin || opt.x >= hi - margin) {
    throw FitError(
        "zoik_fit: profiled shape maximizer sits at the search bracket edge "
        "(a = " + std::to_string(std::exp(opt.x)) +
        "); extend the range [1e-3, 1e3]");
  }
  const double a = std::exp(opt.x);
  const double b = b_given_a(a);

  FitResult fit;
  fit.model = Model::ZOIK;
  fit.n = sample.n;
  fit.param_count = 4;
  fit.level = level;
  fill_discrete_part(fit, sample, "lambda", "p", level);
  fit.estimates["a"] = a;
  fit.estimates["b"] = b;

  const auto interior_ll = [&](std::span<const double> x) {
    return kuma_interior_loglik(x[0], x[1], nc, sum_log_y, sample.interior);
  };
  fill_shape_errors(fit, "a", "b", a, b, interior_ll, level);

  fit.loglik = discrete_loglik(sample) +
               kuma_interior_loglik(a, b, nc, sum_log_y, sample.interior);
  fit.aic = -2.0 * fit.loglik + 2.0 * 4.0;
  fit.bic = -2.0 * fit.loglik + 4.0 * std::log(static_cast<double>(sample.n));
  return fit;
}

}  // namespace ulinf
