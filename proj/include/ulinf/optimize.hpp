#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ulinf {

struct OptimSettings {
  int max_iter = 500;
  double x_tol = 1e-10;
  double f_tol = 1e-12;
  // Finite-difference step; 0 means cbrt(eps) scaled by |x| per coordinate.
  double fd_step = 0.0;
};

struct Optimum1D {
  double x = 0.0;
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct OptimumND {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Maximize f on [lo, hi] by Brent's method (applied to -f internally).
/// On iteration exhaustion the best iterate is returned with
/// converged = false.
Optimum1D maximize_1d(const std::function<double(double)>& f, double lo,
                      double hi, const OptimSettings& settings = {});

/// Maximize f by Nelder-Mead from x0 with a deterministic initial simplex
/// (each coordinate perturbed by 5%, or 0.00025 absolute when zero).
/// Converges when the simplex diameter < x_tol and the f-spread < f_tol;
/// never returns a vertex worse than x0.
OptimumND nelder_mead(const std::function<double(std::span<const double>)>& f,
                      std::span<const double> x0,
                      const OptimSettings& settings = {});

/// Central-difference gradient. Throws std::runtime_error naming the probe
/// point if f evaluates non-finite there.
std::vector<double> fd_gradient(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, const OptimSettings& settings = {});

/// Central-difference Hessian, symmetrized as (H + H^T)/2. Row-major.
std::vector<std::vector<double>> fd_hessian(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, const OptimSettings& settings = {});

}  // namespace ulinf
