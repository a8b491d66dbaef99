#include "ulinf/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ulinf {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;

// E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k * k!), for x <= 1.
double e1_series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k <= 60; ++k) {
    term *= -x / k;
    const double contrib = -term / k;
    sum += contrib;
    if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// exp(x)*E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- 9/(...)))), evaluated by the
// modified Lentz algorithm; valid for x > 1.
double e1_continued_fraction_scaled(double x) {
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h;
}

}  // namespace

double exp_integral_e1(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("exp_integral_e1: argument must be > 0");
  }
  if (x <= 1.0) return e1_series(x);
  return std::exp(-x) * e1_continued_fraction_scaled(x);
}

double exp_integral_e1_scaled(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("exp_integral_e1_scaled: argument must be > 0");
  }
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return e1_continued_fraction_scaled(x);
}

double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: argument must be > 0");
  double result = 0.0;
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // Bernoulli asymptotic series in 1/x^2
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  result +=
      std::log(x) - 0.5 * inv -
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 -
                                              inv2 * 691.0 / 32760.0)))));
  return result;
}

double trigamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("trigamma: argument must be > 0");
  double result = 0.0;
  while (x < 10.0) {
    result += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  result +=
      inv *
      (1.0 +
       inv * (0.5 +
              inv * (1.0 / 6.0 -
                     inv2 * (1.0 / 30.0 -
                            inv2 * (1.0 / 42.0 -
                                    inv2 * (1.0 / 30.0 -
                                            inv2 * (5.0 / 66.0 -
                                                    inv2 * 691.0 / 2730.0)))))));
  return result;
}

namespace {

// Continued fraction for the incomplete beta (Numerical Recipes betacf).
double beta_cf(double a, double b, double x) {
  const double fpmin = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  return h;
}

}  // namespace

double reg_inc_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("reg_inc_beta: shape parameters must be > 0");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) -
                          std::lgamma(b) + a * std::log(x) +
                          b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double norm_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("norm_quantile: probability must be in (0,1)");
  }
  // Acklam's rational approximation, then one Halley step.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
          c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = norm_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

namespace {

// 15-point Kronrod / 7-point Gauss abscissae and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double lo,
                   double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double result_gauss = kWg[3] * fc;
  double result_kronrod = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double offset = half * kXgk[j];
    const double fsum = f(center - offset) + f(center + offset);
    result_kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
  }
  return {result_kronrod * half,
          std::abs((result_kronrod - result_gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec) {
  if (!(a < b)) throw std::domain_error("integrate: requires a < b");
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) ||
      spec.max_subdivisions < 1) {
    throw std::domain_error("integrate: invalid quadrature spec");
  }

  struct Panel {
    double lo, hi, value, error;
  };
  PanelEstimate whole = gk15(f, a, b);
  std::vector<Panel> panels{{a, b, whole.value, whole.error}};
  int subdivisions = 0;

  for (;;) {
    double total = 0.0;
    double total_error = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      total_error += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (total_error <= tol) return {total, total_error, subdivisions};
    if (subdivisions >= spec.max_subdivisions) {
      throw QuadratureError(total, total_error, subdivisions);
    }
    const Panel split = panels[worst];
    const double mid = 0.5 * (split.lo + split.hi);
    const PanelEstimate left = gk15(f, split.lo, mid);
    const PanelEstimate right = gk15(f, mid, split.hi);
    panels[worst] = {split.lo, mid, left.value, left.error};
    panels.push_back({mid, split.hi, right.value, right.error});
    ++subdivisions;
  }
}

}  // namespace ulinf
