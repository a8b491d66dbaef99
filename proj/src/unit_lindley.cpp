#include "ulinf/unit_lindley.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ulinf {

UnitLindley::UnitLindley(double theta) : theta_(theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::domain_error("UnitLindley: theta must be positive and finite");
  }
}

double UnitLindley::log_pdf(double y) const {
  if (!(y > 0.0) || !(y < 1.0)) {
    throw std::domain_error("UnitLindley::log_pdf: y must be in (0,1)");
  }
  return 2.0 * std::log(theta_) - std::log1p(theta_) - 3.0 * std::log1p(-y) -
         theta_ * y / (1.0 - y);
}

double UnitLindley::pdf(double y) const { return std::exp(log_pdf(y)); }

double UnitLindley::cdf(double y) const {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  // 1 - (1 + z/(1+theta)) e^{-z} with z = theta*y/(1-y), written with expm1
  // to stay accurate for small y.
  const double z = theta_ * y / (1.0 - y);
  if (z > 745.0) return 1.0;  // e^{-z} underflows
  return -std::expm1(-z) - (z / (1.0 + theta_)) * std::exp(-z);
}

double UnitLindley::quantile(double u) const {
  if (!(u > 0.0) || !(u < 1.0)) {
    throw std::domain_error("UnitLindley::quantile: u must be in (0,1)");
  }
  // Brent root-find for F(y) = u on a bracket inside (0,1).
  double lo = std::numeric_limits<double>::min();
  double hi = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
  double flo = cdf(lo) - u;   // < 0
  double fhi = cdf(hi) - u;   // > 0

  double a = lo, b = hi, fa = flo, fb = fhi;
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b);
    const double m = 0.5 * (c - b);
    if (std::abs(fb) <= 1e-12 || std::abs(m) <= tol) return b;
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = m; e = m;
    } else {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d; d = p / q;
      } else {
        d = m; e = m;
      }
    }
    a = b; fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = cdf(b) - u;
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a; fc = fa;
      d = b - a; e = d;
    }
  }
  return b;
}

double UnitLindley::sample(Rng& rng) const {
  // Lindley(theta) is a theta/(1+theta) mixture of Exp(theta) and Gamma(2,theta).
  double x = rng.exponential(theta_);
  if (!rng.bernoulli(theta_ / (1.0 + theta_))) x += rng.exponential(theta_);
  double y = x / (1.0 + x);
  if (y >= 1.0) y = std::nextafter(1.0, 0.0);
  if (y <= 0.0) y = std::numeric_limits<double>::min();
  return y;
}

std::vector<double> UnitLindley::sample(std::size_t n, Rng& rng) const {
  std::vector<double> draws(n);
  for (double& d : draws) d = sample(rng);
  return draws;
}

double UnitLindley::moment(unsigned r, const QuadratureSpec& spec) const {
  if (r < 1) throw std::domain_error("UnitLindley::moment: r must be >= 1");
  if (r == 1) return 1.0 / (1.0 + theta_);
  if (r == 2) {
    // (theta^2 e^theta E1(theta) - theta + 1) / (1+theta); the scaled form
    // avoids overflow of e^theta for large theta.
    return (theta_ * theta_ * exp_integral_e1_scaled(theta_) - theta_ + 1.0) /
           (1.0 + theta_);
  }
  const auto integrand = [this, r](double y) {
    return std::pow(y, static_cast<double>(r)) * pdf(y);
  };
  return integrate(integrand, 0.0, 1.0, spec).value;
}

double UnitLindley::variance() const {
  const double m1 = mean();
  return moment(2) - m1 * m1;
}

}  // namespace ulinf
