#include "ulinf/inference.hpp"

#include <cmath>
#include <limits>

#include "ulinf/special_fn.hpp"

namespace ulinf {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

PartitionedSample partition(std::span<const double> sample) {
  PartitionedSample out;
  out.n = sample.size();
  out.interior.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double y = sample[i];
    if (!(y >= 0.0) || !(y <= 1.0)) {
      throw std::domain_error("partition: value at index " + std::to_string(i) +
                              " (" + std::to_string(y) +
                              ") is outside [0,1]");
    }
    if (y == 0.0) {
      ++out.t1;
    } else if (y == 1.0) {
      ++out.t1;
      ++out.t2;
    } else {
      out.interior.push_back(y);
      out.t_y += y / (1.0 - y);
      out.sum_log1m += std::log1p(-y);
    }
  }
  return out;
}

MleEstimates mle(const PartitionedSample& sample) {
  MleEstimates est;
  est.alpha = (sample.n == 0)
                  ? 0.0
                  : static_cast<double>(sample.t1) / static_cast<double>(sample.n);
  est.p = (sample.t1 == 0)
              ? 0.0
              : static_cast<double>(sample.t2) / static_cast<double>(sample.t1);
  const double nc = static_cast<double>(sample.interior_count());
  if (nc > 0) {
    const double t = sample.t_y;
    est.theta =
        (nc - t + std::sqrt(t * t + 6.0 * nc * t + nc * nc)) / (2.0 * t);
  }
  return est;
}

double loglik_alpha(double alpha, const PartitionedSample& sample) {
  const double t1 = static_cast<double>(sample.t1);
  const double rest = static_cast<double>(sample.n - sample.t1);
  double value = 0.0;
  if (t1 > 0.0) {
    if (alpha == 0.0) return kNegInf;
    value += t1 * std::log(alpha);
  }
  if (rest > 0.0) {
    if (alpha == 1.0) return kNegInf;
    value += rest * std::log1p(-alpha);
  }
  return value;
}

double loglik_p(double p, const PartitionedSample& sample) {
  const double t2 = static_cast<double>(sample.t2);
  const double zeros = static_cast<double>(sample.t1 - sample.t2);
  double value = 0.0;
  if (t2 > 0.0) {
    if (p == 0.0) return kNegInf;
    value += t2 * std::log(p);
  }
  if (zeros > 0.0) {
    if (p == 1.0) return kNegInf;
    value += zeros * std::log1p(-p);
  }
  return value;
}

double loglik_theta(double theta, const PartitionedSample& sample) {
  const double nc = static_cast<double>(sample.interior_count());
  if (nc == 0.0) return 0.0;
  return 2.0 * nc * std::log(theta) - nc * std::log1p(theta) -
         theta * sample.t_y - 3.0 * sample.sum_log1m;
}

double loglik(const UlinfParams& params, const PartitionedSample& sample) {
  if (sample.n == 0) return 0.0;
  const double l1 = loglik_alpha(params.alpha, sample);
  const double l2 = loglik_p(params.p, sample);
  const double l3 = loglik_theta(params.theta, sample);
  return l1 + l2 + l3;
}

FisherInfo fisher_information(const UlinfParams& params, std::size_t n,
                              std::size_t nc) {
  const double alpha = params.alpha;
  const double p = params.p;
  const double theta = params.theta;
  if (alpha <= 0.0 || alpha >= 1.0 || p <= 0.0 || p >= 1.0) {
    throw SingularInformationError(
        "fisher_information: alpha and p must lie strictly inside (0,1)");
  }
  FisherInfo info;
  const double dn = static_cast<double>(n);
  info.k_alpha = dn / (alpha * (1.0 - alpha));
  info.k_p = dn * alpha / (p * (1.0 - p));
  info.k_theta = static_cast<double>(nc) *
                 (2.0 / (theta * theta) - 1.0 / ((1.0 + theta) * (1.0 + theta)));
  return info;
}

namespace {

Interval clip(Interval iv, double lo_bound, double hi_bound) {
  if (iv.lo < lo_bound) iv.lo = lo_bound;
  if (iv.hi > hi_bound) iv.hi = hi_bound;
  return iv;
}

}  // namespace

std::map<std::string, Interval> wald_intervals(const UlinfParams& params,
                                               const FisherInfo& info,
                                               double level) {
  if (!(level > 0.0) || !(level < 1.0)) {
    throw std::domain_error("wald_intervals: level must be in (0,1)");
  }
  if (!(info.k_alpha > 0.0) || !(info.k_p > 0.0) || !(info.k_theta > 0.0)) {
    throw SingularInformationError("wald_intervals: information is singular");
  }
  const double z = norm_quantile(0.5 * (1.0 + level));
  const double se_alpha = std::sqrt(1.0 / info.k_alpha);
  const double se_p = std::sqrt(1.0 / info.k_p);
  const double se_theta = std::sqrt(1.0 / info.k_theta);
  const double inf = std::numeric_limits<double>::infinity();
  return {
      {"alpha", clip({params.alpha - z * se_alpha, params.alpha + z * se_alpha},
                     0.0, 1.0)},
      {"p", clip({params.p - z * se_p, params.p + z * se_p}, 0.0, 1.0)},
      {"theta", clip({params.theta - z * se_theta, params.theta + z * se_theta},
                     0.0, inf)},
  };
}

double delta_method_se(const FisherInfo& info,
                       const std::array<double, 3>& gradient) {
  if (!(info.k_alpha > 0.0) || !(info.k_p > 0.0) || !(info.k_theta > 0.0)) {
    throw SingularInformationError("delta_method_se: information is singular");
  }
  const double quad = gradient[0] * gradient[0] / info.k_alpha +
                      gradient[1] * gradient[1] / info.k_p +
                      gradient[2] * gradient[2] / info.k_theta;
  return std::sqrt(quad);
}

std::array<double, 3> mean_gradient(const UlinfParams& params) {
  const double one_plus = 1.0 + params.theta;
  return {params.p - 1.0 / one_plus, params.alpha,
          -(1.0 - params.alpha) / (one_plus * one_plus)};
}

std::string model_name(Model model) {
  switch (model) {
    case Model::ULINF: return "ULINF";
    case Model::BEINF: return "BEINF";
    case Model::ZOIK: return "ZOIK";
  }
  return "?";
}

FitResult ulinf_fit(const PartitionedSample& sample, double level) {
  if (sample.n == 0) throw FitError("ulinf_fit: empty sample");
  const MleEstimates est = mle(sample);
  if (!est.theta) {
    throw FitError("ulinf_fit: no interior observations, theta is not estimable");
  }
  FitResult fit;
  fit.model = Model::ULINF;
  fit.n = sample.n;
  fit.param_count = 3;
  fit.level = level;
  fit.estimates = {{"alpha", est.alpha}, {"p", est.p}, {"theta", *est.theta}};

  const double nc = static_cast<double>(sample.interior_count());
  const double dn = static_cast<double>(sample.n);
  const double theta = *est.theta;
  const double k_theta =
      nc * (2.0 / (theta * theta) - 1.0 / ((1.0 + theta) * (1.0 + theta)));
  const double z = norm_quantile(0.5 * (1.0 + level));

  // Discrete-part intervals are only available away from the boundary,
  // where the information is nonsingular.
  const bool alpha_interior = est.alpha > 0.0 && est.alpha < 1.0;
  const bool p_interior = est.p > 0.0 && est.p < 1.0 && sample.t1 > 0;
  if (alpha_interior) {
    const double se = std::sqrt(est.alpha * (1.0 - est.alpha) / dn);
    fit.std_errors["alpha"] = se;
    fit.conf_intervals["alpha"] =
        clip({est.alpha - z * se, est.alpha + z * se}, 0.0, 1.0);
  }
  if (alpha_interior && p_interior) {
    const double se = std::sqrt(est.p * (1.0 - est.p) / (dn * est.alpha));
    fit.std_errors["p"] = se;
    fit.conf_intervals["p"] = clip({est.p - z * se, est.p + z * se}, 0.0, 1.0);
  }
  {
    const double se = std::sqrt(1.0 / k_theta);
    fit.std_errors["theta"] = se;
    fit.conf_intervals["theta"] =
        clip({theta - z * se, theta + z * se}, 0.0,
             std::numeric_limits<double>::infinity());
  }

  const UlinfParams at_mle(est.alpha, est.p, theta);
  fit.loglik = loglik(at_mle, sample);
  fit.aic = -2.0 * fit.loglik + 2.0 * static_cast<double>(fit.param_count);
  fit.bic = -2.0 * fit.loglik + static_cast<double>(fit.param_count) * std::log(dn);

  const auto [mean, variance] = UlinfDistribution(at_mle).mean_variance();
  fit.derived = {{"mean", mean}, {"variance", variance}};
  if (alpha_interior && p_interior) {
    const FisherInfo info = fisher_information(at_mle, sample.n,
                                               sample.interior_count());
    fit.derived["mean_se"] = delta_method_se(info, mean_gradient(at_mle));
  }
  return fit;
}

}  // namespace ulinf
