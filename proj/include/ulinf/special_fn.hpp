#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace ulinf {

/// Exponential integral E1(x) = int_x^inf exp(-t)/t dt for x > 0.
/// Power series for x <= 1, modified Lentz continued fraction for x > 1;
/// relative accuracy better than 1e-12 across the domain.
/// Throws std::domain_error for x <= 0.
double exp_integral_e1(double x);

/// exp(x) * E1(x), computed without overflow for large x.
double exp_integral_e1_scaled(double x);

/// Digamma function psi(x) for x > 0 (recurrence + asymptotic series).
double digamma(double x);

/// Trigamma function psi'(x) for x > 0.
double trigamma(double x);

/// Regularized incomplete beta I_x(a, b) via continued fraction.
double reg_inc_beta(double x, double a, double b);

/// Standard normal CDF.
double norm_cdf(double x);

/// Inverse standard normal CDF (rational approximation plus one Halley
/// refinement; absolute error well below 1e-9). Throws for p outside (0,1).
double norm_quantile(double p);

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 200;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error bound
  int subdivisions = 0;
};

/// Thrown when adaptive subdivision hits the budget before reaching the
/// requested tolerance; carries the best estimate and its error bound.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(double best, double error_bound, int subdivisions)
      : std::runtime_error("quadrature did not converge after " +
                           std::to_string(subdivisions) +
                           " subdivisions (best estimate " +
                           std::to_string(best) + ", error bound " +
                           std::to_string(error_bound) + ")"),
        best_estimate(best),
        error_bound(error_bound),
        subdivisions(subdivisions) {}

  double best_estimate;
  double error_bound;
  int subdivisions;
};

/// Adaptive 15-point Gauss-Kronrod quadrature of f over (a, b). The rule is
/// open, so f is never evaluated at a or b and integrable endpoint behavior
/// is handled by refinement. Converges when the error estimate drops below
/// max(abs_tol, rel_tol * |result|); otherwise throws QuadratureError.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec = {});

}  // namespace ulinf
