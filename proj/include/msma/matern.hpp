#pragma once

// Matern correlation kernel and the default length-scale rule (correlation
// 0.05 at the maximum separation of the inputs).

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "msma/link.hpp"
#include "msma/stats.hpp"

namespace msma {

struct MaternKernel {
  double nu = 0.75;
  double ell = 1.0;

  double operator()(double r) const {
    if (r < 0.0) throw std::domain_error("matern: distance must be >= 0");
    const double t = std::sqrt(2.0 * nu) * r / ell;
    if (t < 1e-8) return 1.0;
    const double lg = log_gamma(nu);
    double v = std::exp((1.0 - nu) * std::log(2.0) - lg + nu * std::log(t)) *
               bessel_k(nu, t);
    if (!(v > 0.0)) v = std::numeric_limits<double>::min();
    return std::min(v, 1.0);
  }
};

inline double matern(const MaternKernel& k, double r) { return k(r); }

// Solve k(max_separation) = 0.05 for the length-scale by bisection.
inline double default_lengthscale(double nu, double max_separation,
                                  double target = 0.05) {
  if (!(max_separation > 0.0))
    throw std::invalid_argument("default_lengthscale: separation must be > 0");
  double lo = 1e-4 * max_separation, hi = 1e4 * max_separation;
  auto corr = [&](double ell) { return MaternKernel{nu, ell}(max_separation); };
  // correlation increases with the length-scale
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (corr(mid) < target)
      lo = mid;
    else
      hi = mid;
    if (std::fabs(corr(mid) - target) < 1e-9) return mid;
  }
  return 0.5 * (lo + hi);
}

// First row of the Toeplitz prior covariance on the knot grid.
inline VectorXd toeplitz_first_row(const MaternKernel& k, const KnotGrid& g) {
  VectorXd row(g.size());
  for (int l = 0; l < g.size(); ++l) row[l] = k(g.delta * l);
  return row;
}

}  // namespace msma
