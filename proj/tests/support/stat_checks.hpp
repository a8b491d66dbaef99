#pragma once

// Test-only statistical helpers: empirical summaries, a one-sample
// Kolmogorov-Smirnov statistic and the Anderson-Darling statistic. These are
// oracles for the library under test and deliberately share no code with it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace testsupport {

inline double mean_of(const std::vector<double>& xs) {
  double sum = 0.0;
  for (const double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

inline double sd_of(const std::vector<double>& xs) {
  const double mu = mean_of(xs);
  double ss = 0.0;
  for (const double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

/// sup_y |F_n(y) - F(y)| for a continuous reference CDF.
inline double ks_statistic(std::vector<double> sample,
                           const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

inline double std_normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

/// Anderson-Darling A^2 of a sample against the standard normal.
inline double anderson_darling(std::vector<double> z) {
  std::sort(z.begin(), z.end());
  const std::size_t n = z.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f_lo = std_normal_cdf(z[i]);
    const double f_hi = std_normal_cdf(z[n - 1 - i]);
    acc += (2.0 * static_cast<double>(i) + 1.0) *
           (std::log(f_lo) + std::log1p(-f_hi));
  }
  const double dn = static_cast<double>(n);
  return -dn - acc / dn;
}

/// Run body(i) for i in [0, count) across hardware threads; used to keep the
/// heavier Monte Carlo checks quick. body must only touch slot i of shared
/// storage.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& body) {
  const unsigned threads =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) body(i);
    });
  }
  for (auto& worker : pool) worker.join();
}

}  // namespace testsupport
