#include <doctest.h>

#include <cmath>

#include "support/stat_checks.hpp"
#include "ulinf/rng.hpp"
#include "ulinf/special_fn.hpp"
#include "ulinf/unit_lindley.hpp"

using namespace ulinf;

TEST_CASE("constructor validates theta") {
  CHECK_THROWS_AS(UnitLindley(0.0), std::domain_error);
  CHECK_THROWS_AS(UnitLindley(-1.5), std::domain_error);
  CHECK_THROWS_AS(UnitLindley(std::numeric_limits<double>::infinity()),
                  std::domain_error);
}

TEST_CASE("pdf reference value and domain") {
  const UnitLindley ul(1.5);
  // (1.5^2/2.5) * 8 * exp(-1.5)
  CHECK(ul.pdf(0.5) == doctest::Approx(1.6065371530686948).epsilon(1e-14));
  CHECK(ul.log_pdf(0.5) == doctest::Approx(0.47408102602200963).epsilon(1e-13));
  CHECK_THROWS_AS(ul.pdf(0.0), std::domain_error);
  CHECK_THROWS_AS(ul.pdf(1.0), std::domain_error);
  CHECK_THROWS_AS(ul.pdf(-0.1), std::domain_error);
}

TEST_CASE("pdf underflows to zero near one without NaN") {
  const UnitLindley ul(1.5);
  const double v = ul.pdf(1.0 - 1e-12);
  CHECK(v == 0.0);
  CHECK_FALSE(std::isnan(v));
}

TEST_CASE("pdf integrates to one across theta") {
  for (const double theta : {0.1, 1.0, 1.5, 5.0, 20.0}) {
    const UnitLindley ul(theta);
    const double mass = integrate([&](double y) { return ul.pdf(y); }, 0.0, 1.0).value;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("cdf boundaries, reference value and quadrature agreement") {
  const UnitLindley ul(1.5);
  CHECK(ul.cdf(0.0) == 0.0);
  CHECK(ul.cdf(-3.0) == 0.0);
  CHECK(ul.cdf(1.0) == 1.0);
  CHECK(ul.cdf(7.0) == 1.0);
  CHECK(ul.cdf(0.5) == doctest::Approx(0.64299174376251227).epsilon(1e-13));
  const double quad = integrate([&](double y) { return ul.pdf(y); }, 0.0, 0.5).value;
  CHECK(ul.cdf(0.5) == doctest::Approx(quad).epsilon(1e-9));
}

TEST_CASE("cdf is strictly increasing on the interior") {
  // strict until the value saturates to 1 in double precision
  for (const double theta : {0.1, 0.5, 1.0, 1.3, 1.5, 3.0, 10.0}) {
    const UnitLindley ul(theta);
    double prev = ul.cdf(1e-4);
    for (double y = 2e-4; y < 0.9995; y += 1e-3) {
      const double cur = ul.cdf(y);
      if (prev < 1.0 - 1e-14) {
        CHECK(cur > prev);
      } else {
        CHECK(cur >= prev);
      }
      prev = cur;
    }
  }
}

TEST_CASE("cdf derivative matches pdf") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const double y = 0.05 + 0.9 * rng.uniform01();
    const double theta = 0.2 + 5.0 * rng.uniform01();
    const UnitLindley ul(theta);
    const double h = 1e-6 * std::min(y, 1.0 - y);
    const double fd = (ul.cdf(y + h) - ul.cdf(y - h)) / (2.0 * h);
    CHECK(fd == doctest::Approx(ul.pdf(y)).epsilon(1e-5));
  }
}

TEST_CASE("quantile median, round trips and domain") {
  const UnitLindley ul(1.5);
  const double median = ul.quantile(0.5);
  CHECK(median == doctest::Approx(0.40976720732833676).epsilon(1e-10));
  CHECK(std::abs(ul.cdf(median) - 0.5) <= 1e-12);
  CHECK(std::abs(ul.cdf(ul.quantile(0.75)) - 0.75) <= 1e-10);

  const UnitLindley ul2(2.0);
  CHECK(ul2.quantile(ul2.cdf(0.3)) == doctest::Approx(0.3).epsilon(1e-9));

  CHECK_THROWS_AS(ul.quantile(0.0), std::domain_error);
  CHECK_THROWS_AS(ul.quantile(1.0), std::domain_error);
  CHECK_THROWS_AS(ul.quantile(-0.4), std::domain_error);
}

TEST_CASE("quantile is monotone and approaches the endpoints") {
  const UnitLindley ul(1.3);
  double prev = 0.0;
  for (double u = 1e-6; u < 1.0; u += 0.02) {
    const double q = ul.quantile(u);
    CHECK(q > prev);
    CHECK(q > 0.0);
    CHECK(q < 1.0);
    prev = q;
  }
  CHECK(ul.quantile(1e-9) < 1e-3);
  // the right tail is thin: the quantile contract is |F(q) - u| <= 1e-12
  const double q_hi = ul.quantile(1.0 - 1e-9);
  CHECK(q_hi > ul.quantile(0.99));
  CHECK(std::abs(ul.cdf(q_hi) - (1.0 - 1e-9)) <= 1e-12);
}

TEST_CASE("sampling basics") {
  const UnitLindley ul(1.5);
  Rng rng(99);
  CHECK(ul.sample(0, rng).empty());

  const std::size_t n = 1000000;
  const auto draws = ul.sample(n, rng);
  double sum = 0.0;
  for (const double y : draws) {
    CHECK(y > 0.0);
    CHECK(y < 1.0);
    sum += y;
  }
  CHECK(sum / static_cast<double>(n) == doctest::Approx(0.4).epsilon(0.002 / 0.4));
}

TEST_CASE("sampling agrees with the CDF (Kolmogorov-Smirnov)") {
  const UnitLindley ul(1.5);
  Rng rng(123);
  const std::size_t n = 100000;
  const auto draws = ul.sample(n, rng);
  const double d =
      testsupport::ks_statistic(draws, [&](double y) { return ul.cdf(y); });
  // 99.9% asymptotic critical value: sqrt(ln(2000)/2)/sqrt(n)
  CHECK(d < 1.949474603520405 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("sampling is deterministic in the seed") {
  const UnitLindley ul(0.8);
  Rng a(42), b(42);
  CHECK(ul.sample(64, a) == ul.sample(64, b));
}

TEST_CASE("moments") {
  const UnitLindley ul(1.5);
  CHECK(ul.moment(1) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(ul.mean() == 0.4);
  CHECK_THROWS_AS(ul.moment(0), std::domain_error);

  // mass concentrates at zero as theta grows
  CHECK(UnitLindley(1e4).moment(1) < 1e-3);

  // closed-form second moment against quadrature
  for (const double theta : {0.1, 0.5, 1.0, 1.5, 5.0, 20.0}) {
    const UnitLindley u(theta);
    const double quad =
        integrate([&](double y) { return y * y * u.pdf(y); }, 0.0, 1.0).value;
    CHECK(u.moment(2) == doctest::Approx(quad).epsilon(1e-8));
  }
  CHECK(ul.moment(2) == doctest::Approx(0.203431002362424659).epsilon(1e-13));
  CHECK(ul.variance() ==
        doctest::Approx(0.203431002362424659 - 0.16).epsilon(1e-12));

  // third moment goes through quadrature
  CHECK(ul.moment(3) == doctest::Approx(0.115439510630910963).epsilon(1e-9));
}

TEST_CASE("first moment is decreasing in theta") {
  double prev = UnitLindley(0.05).moment(1);
  for (double theta = 0.1; theta < 30.0; theta *= 1.7) {
    const double cur = UnitLindley(theta).moment(1);
    CHECK(cur < prev);
    prev = cur;
  }
}
