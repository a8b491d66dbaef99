#include "ulinf/inflated_mixture.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ulinf {

UlinfParams::UlinfParams(double alpha, double p, double theta)
    : alpha(alpha), p(p), theta(theta) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("UlinfParams: alpha must be in [0,1]");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("UlinfParams: p must be in [0,1]");
  }
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::domain_error("UlinfParams: theta must be positive and finite");
  }
}

UlinfPoint UlinfPoint::interior(double y) {
  if (!(y > 0.0) || !(y < 1.0)) {
    throw std::domain_error("UlinfPoint::interior: y must be in (0,1)");
  }
  return {Kind::Interior, y};
}

UlinfPoint UlinfPoint::classify(double value) {
  if (value == 0.0) return at_zero();
  if (value == 1.0) return at_one();
  return interior(value);
}

UlinfDistribution::UlinfDistribution(UlinfParams params)
    : params_(params), unit_lindley_(params.theta) {}

double UlinfDistribution::density(const UlinfPoint& point) const {
  switch (point.kind) {
    case UlinfPoint::Kind::AtZero:
      return params_.alpha * (1.0 - params_.p);
    case UlinfPoint::Kind::AtOne:
      return params_.alpha * params_.p;
    case UlinfPoint::Kind::Interior:
      if (params_.alpha == 1.0) return 0.0;
      return (1.0 - params_.alpha) * unit_lindley_.pdf(point.y);
  }
  return 0.0;
}

double UlinfDistribution::cdf(double y) const {
  if (y < 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  return params_.alpha * (1.0 - params_.p) +
         (1.0 - params_.alpha) * unit_lindley_.cdf(y);
}

double UlinfDistribution::moment(unsigned r) const {
  if (r < 1) throw std::domain_error("UlinfDistribution::moment: r must be >= 1");
  const double discrete = params_.alpha * params_.p;
  if (params_.alpha == 1.0) return discrete;
  return discrete + (1.0 - params_.alpha) * unit_lindley_.moment(r);
}

std::pair<double, double> UlinfDistribution::mean_variance() const {
  const double mean = params_.alpha * params_.p +
                      (1.0 - params_.alpha) / (1.0 + params_.theta);
  const double second = moment(2);
  double variance = second - mean * mean;
  if (variance < 0.0 && variance > -1e-12) variance = 0.0;  // roundoff only
  return {mean, variance};
}

std::vector<double> UlinfDistribution::sample(std::size_t n, Rng& rng,
                                              SampleMode mode) const {
  std::vector<double> draws;
  draws.reserve(n);
  if (mode == SampleMode::Mixture) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.bernoulli(params_.alpha)) {
        draws.push_back(rng.bernoulli(params_.p) ? 1.0 : 0.0);
      } else {
        draws.push_back(unit_lindley_.sample(rng));
      }
    }
    return draws;
  }
  // Stratified: endpoint count fixed at round(alpha*n), interior fills the
  // rest; the concatenation is shuffled so order carries no signal.
  const auto n_endpoint = static_cast<std::size_t>(
      std::llround(params_.alpha * static_cast<double>(n)));
  for (std::size_t i = 0; i < n_endpoint; ++i) {
    draws.push_back(rng.bernoulli(params_.p) ? 1.0 : 0.0);
  }
  for (std::size_t i = n_endpoint; i < n; ++i) {
    draws.push_back(unit_lindley_.sample(rng));
  }
  rng.shuffle(draws);
  return draws;
}

}  // namespace ulinf
