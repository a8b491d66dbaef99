#pragma once

#include "ulinf/inference.hpp"

namespace ulinf {

/// Inflated beta: mass alpha*(1-gamma) at 0, alpha*gamma at 1 and a
/// Beta(a, b) density (shape parameterization) on the interior.
struct BeinfParams {
  double alpha;
  double gamma;
  double a;
  double b;

  BeinfParams(double alpha, double gamma, double a, double b);
};

/// Inflated Kumaraswamy: mass lambda*(1-p) at 0, lambda*p at 1 and a
/// Kumaraswamy(a, b) density on the interior.
struct ZoikParams {
  double lambda;
  double p;
  double a;
  double b;

  ZoikParams(double lambda, double p, double a, double b);
};

/// Log density of the inflated beta; zero-probability cases yield -infinity.
double beinf_logpdf(const UlinfPoint& point, const BeinfParams& params);

/// Log density of the inflated Kumaraswamy.
double zoik_logpdf(const UlinfPoint& point, const ZoikParams& params);

/// Mixed CDFs, used for fitted-vs-empirical CDF tables.
double beinf_cdf(double y, const BeinfParams& params);
double zoik_cdf(double y, const ZoikParams& params);

/// Fit the inflated beta: discrete part in closed form (same sufficient
/// statistics as the inflated unit-Lindley), beta shapes by Newton iteration
/// on the digamma score equations with a Nelder-Mead fallback. Standard
/// errors for the shapes come from the finite-difference observed
/// information. Requires at least 2 interior observations.
FitResult beinf_fit(const PartitionedSample& sample, double level = 0.95);

/// Fit the inflated Kumaraswamy: discrete part in closed form; for the
/// shapes, b has a closed form given a, so a single bracketed search over
/// ln(a) maximizes the profiled interior log-likelihood.
FitResult zoik_fit(const PartitionedSample& sample, double level = 0.95);

}  // namespace ulinf
