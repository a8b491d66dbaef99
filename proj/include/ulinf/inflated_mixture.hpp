#pragma once

#include <utility>
#include <vector>

#include "ulinf/rng.hpp"
#include "ulinf/special_fn.hpp"
#include "ulinf/unit_lindley.hpp"

namespace ulinf {

/// Parameters of the zero-and-one inflated unit-Lindley model: mass
/// alpha*(1-p) at 0, alpha*p at 1 and (1-alpha)*UL(theta) on the interior.
struct UlinfParams {
  double alpha;
  double p;
  double theta;

  UlinfParams(double alpha, double p, double theta);
};

/// Where an observation sits: exactly 0, exactly 1, or strictly inside (0,1).
/// Endpoint membership is decided by exact equality with 0.0 and 1.0.
struct UlinfPoint {
  enum class Kind { AtZero, AtOne, Interior };

  Kind kind;
  double y;  // meaningful only for Interior

  static UlinfPoint at_zero() { return {Kind::AtZero, 0.0}; }
  static UlinfPoint at_one() { return {Kind::AtOne, 1.0}; }
  static UlinfPoint interior(double y);
  /// Classify a raw value in [0,1]; throws std::domain_error otherwise.
  static UlinfPoint classify(double value);
};

enum class SampleMode {
  Mixture,     // i.i.d. draws from the model
  Stratified,  // exactly round(alpha*n) endpoint draws, then shuffled
};

class UlinfDistribution {
 public:
  explicit UlinfDistribution(UlinfParams params);

  const UlinfParams& params() const { return params_; }
  const UnitLindley& continuous_part() const { return unit_lindley_; }

  /// Density with respect to the mixed counting/Lebesgue measure.
  double density(const UlinfPoint& point) const;
  double density(double value) const { return density(UlinfPoint::classify(value)); }

  /// Right-continuous CDF with jumps alpha*(1-p) at 0 and alpha*p at 1.
  double cdf(double y) const;

  /// E(y^r) = alpha*p + (1-alpha)*mu_r, r >= 1.
  double moment(unsigned r) const;

  /// Mean and variance in closed form (second unit-Lindley moment via the
  /// exponential integral).
  std::pair<double, double> mean_variance() const;

  std::vector<double> sample(std::size_t n, Rng& rng,
                             SampleMode mode = SampleMode::Mixture) const;

 private:
  UlinfParams params_;
  UnitLindley unit_lindley_;
};

}  // namespace ulinf
