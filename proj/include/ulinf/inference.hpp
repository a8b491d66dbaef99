#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ulinf/inflated_mixture.hpp"

namespace ulinf {

/// A sample split into endpoint and interior parts together with the
/// sufficient statistics: t1 counts values equal to 0 or 1, t2 counts values
/// equal to 1, t_y = sum of y/(1-y) over the interior. Immutable once built.
struct PartitionedSample {
  std::size_t n = 0;
  std::size_t t1 = 0;
  std::size_t t2 = 0;
  std::vector<double> interior;
  double t_y = 0.0;
  double sum_log1m = 0.0;  // sum of ln(1-y) over the interior

  std::size_t interior_count() const { return interior.size(); }
};

/// Exact classification by equality with 0 and 1. Throws std::domain_error
/// naming the index of the first value outside [0,1].
PartitionedSample partition(std::span<const double> sample);

/// Closed-form maximum likelihood estimates. theta is absent when the sample
/// has no interior observations; alpha and p are always available (p = 0
/// when t1 = 0, following the 0/0 := 0 convention).
struct MleEstimates {
  double alpha = 0.0;
  double p = 0.0;
  std::optional<double> theta;
};

MleEstimates mle(const PartitionedSample& sample);

/// Log-likelihood l1(alpha) + l2(p) + l3(theta) with the 0*ln(0) = 0
/// convention; returns -infinity (never throws) when a boundary parameter
/// contradicts a positive count.
double loglik(const UlinfParams& params, const PartitionedSample& sample);

/// The three factors separately; loglik is their sum.
double loglik_alpha(double alpha, const PartitionedSample& sample);
double loglik_p(double p, const PartitionedSample& sample);
double loglik_theta(double theta, const PartitionedSample& sample);

class SingularInformationError : public std::runtime_error {
 public:
  explicit SingularInformationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Diagonal Fisher information diag(n/(alpha(1-alpha)), n*alpha/(p(1-p)),
/// nc*(2/theta^2 - 1/(1+theta)^2)); the parameters are orthogonal, so the
/// off-diagonal entries are zero. nc is the realized interior count.
struct FisherInfo {
  double k_alpha = 0.0;
  double k_p = 0.0;
  double k_theta = 0.0;
};

FisherInfo fisher_information(const UlinfParams& params, std::size_t n,
                              std::size_t nc);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wald intervals estimate +- z_{(1+level)/2} * se from the inverse
/// information; alpha and p intervals are clipped to [0,1], theta to
/// [0, inf).
std::map<std::string, Interval> wald_intervals(const UlinfParams& params,
                                               const FisherInfo& info,
                                               double level);

/// sqrt(g^T K^{-1} g) for a smooth scalar function of the parameters.
double delta_method_se(const FisherInfo& info,
                       const std::array<double, 3>& gradient);

/// Gradient of the model mean alpha*p + (1-alpha)/(1+theta) with respect to
/// (alpha, p, theta), for use with delta_method_se.
std::array<double, 3> mean_gradient(const UlinfParams& params);

enum class Model { ULINF, BEINF, ZOIK };

std::string model_name(Model model);

/// One fitted model: estimates, standard errors and Wald intervals (absent
/// for parameters whose information is singular at the estimate), the
/// maximized log-likelihood and the information criteria.
struct FitResult {
  Model model = Model::ULINF;
  std::map<std::string, double> estimates;
  std::map<std::string, double> std_errors;
  std::map<std::string, Interval> conf_intervals;
  std::map<std::string, double> derived;  // reparameterizations, e.g. beta mean/precision
  double loglik = 0.0;
  double aic = 0.0;
  double bic = 0.0;
  std::size_t n = 0;
  std::size_t param_count = 0;
  double level = 0.95;
};

class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

/// Full inflated unit-Lindley fit: closed-form MLEs, Fisher standard errors,
/// Wald intervals, log-likelihood, AIC and BIC (k = 3). Requires at least
/// one interior observation; boundary discrete estimates are reported
/// without standard errors or intervals.
FitResult ulinf_fit(const PartitionedSample& sample, double level = 0.95);

}  // namespace ulinf
