#pragma once

#include <vector>

#include "ulinf/rng.hpp"
#include "ulinf/special_fn.hpp"

namespace ulinf {

/// Unit-Lindley distribution UL(theta) on (0,1): the image of a Lindley(theta)
/// variable X under Y = X/(1+X). Single parameter theta > 0; mean 1/(1+theta).
class UnitLindley {
 public:
  explicit UnitLindley(double theta);

  double theta() const { return theta_; }

  /// log f(y) = 2 ln(theta) - ln(1+theta) - 3 ln(1-y) - theta*y/(1-y).
  /// Throws std::domain_error for y outside (0,1).
  double log_pdf(double y) const;

  /// Density, evaluated in log space; underflows cleanly to 0 near y = 1.
  double pdf(double y) const;

  /// CDF as a total function: 0 for y <= 0, 1 for y >= 1.
  double cdf(double y) const;

  /// Inverse CDF by bracketed root-finding, |F(y) - u| <= 1e-12.
  /// Throws std::domain_error for u outside (0,1).
  double quantile(double u) const;

  /// One draw via the Lindley mixture: Exponential(theta) with probability
  /// theta/(1+theta), else the sum of two Exponential(theta) variates; then
  /// X/(1+X). Always strictly inside (0,1).
  double sample(Rng& rng) const;
  std::vector<double> sample(std::size_t n, Rng& rng) const;

  /// r-th moment about the origin, r >= 1. Closed forms for r = 1 and r = 2
  /// (the latter validated against quadrature in the test suite); adaptive
  /// quadrature for higher orders.
  double moment(unsigned r, const QuadratureSpec& spec = {}) const;

  double mean() const { return 1.0 / (1.0 + theta_); }
  double variance() const;

 private:
  double theta_;
};

}  // namespace ulinf
