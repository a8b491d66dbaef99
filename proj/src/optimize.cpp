#include "ulinf/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ulinf {

Optimum1D maximize_1d(const std::function<double(double)>& f, double lo,
                      double hi, const OptimSettings& settings) {
  if (!(lo < hi)) throw std::domain_error("maximize_1d: requires lo < hi");

  // Brent's localmin on g = -f.
  const auto g = [&f](double x) { return -f(x); };
  const double golden = 0.3819660112501051;
  double a = lo, b = hi;
  double x = a + golden * (b - a);
  double w = x, v = x;
  double fx = g(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  int iter = 0;
  for (; iter < settings.max_iter; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol = settings.x_tol * std::abs(x) + 0.25 * settings.x_tol;
    if (std::abs(x - m) <= 2.0 * tol - 0.5 * (b - a)) {
      return {x, -fx, iter, true};
    }
    double p = 0.0, q = 0.0, r = 0.0;
    bool take_golden = true;
    if (std::abs(e) > tol) {
      // parabolic fit through x, v, w
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_old = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) &&
          p < q * (b - x)) {
        d = p / q;
        const double u_try = x + d;
        if (u_try - a < 2.0 * tol || b - u_try < 2.0 * tol) {
          d = (x < m) ? tol : -tol;
        }
        take_golden = false;
      }
    }
    if (take_golden) {
      e = (x < m) ? b - x : a - x;
      d = golden * e;
    }
    const double u =
        (std::abs(d) >= tol) ? x + d : x + ((d > 0.0) ? tol : -tol);
    const double fu = g(u);
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {x, -fx, iter, false};
}

OptimumND nelder_mead(const std::function<double(std::span<const double>)>& f,
                      std::span<const double> x0,
                      const OptimSettings& settings) {
  const std::size_t dim = x0.size();
  if (dim == 0) throw std::domain_error("nelder_mead: empty starting point");

  std::vector<std::vector<double>> simplex(dim + 1,
                                           std::vector<double>(x0.begin(), x0.end()));
  for (std::size_t i = 0; i < dim; ++i) {
    double& coord = simplex[i + 1][i];
    coord = (coord != 0.0) ? 1.05 * coord : 0.00025;
  }
  std::vector<double> fvals(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fvals[i] = -f(simplex[i]);

  const auto order = [&] {
    std::vector<std::size_t> idx(dim + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t l, std::size_t r) { return fvals[l] < fvals[r]; });
    std::vector<std::vector<double>> s2(dim + 1);
    std::vector<double> f2(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
      s2[i] = std::move(simplex[idx[i]]);
      f2[i] = fvals[idx[i]];
    }
    simplex = std::move(s2);
    fvals = std::move(f2);
  };

  int iter = 0;
  for (; iter < settings.max_iter; ++iter) {
    order();

    double diameter = 0.0;
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        diameter = std::max(diameter, std::abs(simplex[i][j] - simplex[0][j]));
      }
    }
    // fminsearch-style termination: both the simplex and the f-spread must
    // be small, otherwise a shallow bowl stops at f-resolution (~1e-6 in x)
    const double f_spread = std::abs(fvals[dim] - fvals[0]);
    if (diameter < settings.x_tol && f_spread < settings.f_tol) {
      return {simplex[0], -fvals[0], iter, true};
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const auto blend = [&](double t) {
      std::vector<double> p(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        p[j] = centroid[j] + t * (simplex[dim][j] - centroid[j]);
      }
      return p;
    };

    const std::vector<double> reflected = blend(-1.0);
    const double f_reflected = -f(reflected);
    if (f_reflected < fvals[0]) {
      const std::vector<double> expanded = blend(-2.0);
      const double f_expanded = -f(expanded);
      if (f_expanded < f_reflected) {
        simplex[dim] = expanded;
        fvals[dim] = f_expanded;
      } else {
        simplex[dim] = reflected;
        fvals[dim] = f_reflected;
      }
    } else if (f_reflected < fvals[dim - 1]) {
      simplex[dim] = reflected;
      fvals[dim] = f_reflected;
    } else {
      const double t = (f_reflected < fvals[dim]) ? -0.5 : 0.5;
      const std::vector<double> contracted = blend(t);
      const double f_contracted = -f(contracted);
      if (f_contracted < std::min(f_reflected, fvals[dim])) {
        simplex[dim] = contracted;
        fvals[dim] = f_contracted;
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 1; i <= dim; ++i) {
          for (std::size_t j = 0; j < dim; ++j) {
            simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
          }
          fvals[i] = -f(simplex[i]);
        }
      }
    }
  }
  order();
  return {simplex[0], -fvals[0], iter, false};
}

namespace {

double fd_step_for(double coord, const OptimSettings& settings) {
  if (settings.fd_step > 0.0) return settings.fd_step;
  const double cbrt_eps = 6.055454452393343e-06;  // eps^(1/3)
  return cbrt_eps * std::max(1.0, std::abs(coord));
}

double checked_eval(const std::function<double(std::span<const double>)>& f,
                    std::span<const double> x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::string where = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      where += std::to_string(x[i]);
      where += (i + 1 < x.size()) ? ", " : ")";
    }
    throw std::runtime_error("finite difference probe returned non-finite value at " + where);
  }
  return v;
}

}  // namespace

std::vector<double> fd_gradient(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, const OptimSettings& settings) {
  const std::size_t dim = x.size();
  std::vector<double> point(x.begin(), x.end());
  std::vector<double> grad(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double h = fd_step_for(point[i], settings);
    const double saved = point[i];
    point[i] = saved + h;
    const double f_plus = checked_eval(f, point);
    point[i] = saved - h;
    const double f_minus = checked_eval(f, point);
    point[i] = saved;
    grad[i] = (f_plus - f_minus) / (2.0 * h);
  }
  return grad;
}

std::vector<std::vector<double>> fd_hessian(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, const OptimSettings& settings) {
  const std::size_t dim = x.size();
  std::vector<double> point(x.begin(), x.end());
  std::vector<std::vector<double>> hess(dim, std::vector<double>(dim, 0.0));
  const double f0 = checked_eval(f, point);

  std::vector<double> steps(dim);
  for (std::size_t i = 0; i < dim; ++i) steps[i] = fd_step_for(point[i], settings);

  for (std::size_t i = 0; i < dim; ++i) {
    const double hi = steps[i];
    const double saved = point[i];
    point[i] = saved + hi;
    const double f_plus = checked_eval(f, point);
    point[i] = saved - hi;
    const double f_minus = checked_eval(f, point);
    point[i] = saved;
    hess[i][i] = (f_plus - 2.0 * f0 + f_minus) / (hi * hi);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double hi = steps[i], hj = steps[j];
      const double si = point[i], sj = point[j];
      point[i] = si + hi; point[j] = sj + hj;
      const double fpp = checked_eval(f, point);
      point[j] = sj - hj;
      const double fpm = checked_eval(f, point);
      point[i] = si - hi; point[j] = sj + hj;
      const double fmp = checked_eval(f, point);
      point[j] = sj - hj;
      const double fmm = checked_eval(f, point);
      point[i] = si; point[j] = sj;
      const double mixed = (fpp - fpm - fmp + fmm) / (4.0 * hi * hj);
      hess[i][j] = mixed;
      hess[j][i] = mixed;
    }
  }
  return hess;
}

}  // namespace ulinf
