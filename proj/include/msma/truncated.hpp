#pragma once

// Truncated univariate draws by CDF inversion. The normal sampler switches
// to the survival scale when the interval sits in a tail, so draws stay
// accurate far beyond |z| = 8 where 1 - Phi(z) would cancel.

#include <cmath>
#include <limits>
#include <stdexcept>

#include "msma/rng.hpp"
#include "msma/stats.hpp"

namespace msma {

inline double sample_trunc_normal(double mean, double sd, double lo, double hi,
                                  Rng& rng) {
  if (!(sd > 0.0)) throw std::domain_error("sample_trunc_normal: sd must be > 0");
  if (!(lo < hi)) throw std::domain_error("sample_trunc_normal: empty interval");
  const double a = (lo - mean) / sd;
  const double b = (hi - mean) / sd;
  double z;
  if (a >= 0.0) {
    // right tail: work with survival probabilities
    const double qa = norm_sf(a);
    const double qb = std::isinf(b) ? 0.0 : norm_sf(b);
    const double mass = qa - qb;
    if (!(mass > 1e-300)) throw std::runtime_error("empty truncation region");
    z = -norm_quantile(qb + rng.uniform() * mass);
  } else if (b <= 0.0) {
    const double pa = std::isinf(a) ? 0.0 : norm_cdf(a);
    const double pb = norm_cdf(b);
    const double mass = pb - pa;
    if (!(mass > 1e-300)) throw std::runtime_error("empty truncation region");
    z = norm_quantile(pa + rng.uniform() * mass);
  } else {
    const double pa = std::isinf(a) ? 0.0 : norm_cdf(a);
    const double pb = std::isinf(b) ? 1.0 : norm_cdf(b);
    const double mass = pb - pa;
    if (!(mass > 1e-300)) throw std::runtime_error("empty truncation region");
    z = norm_quantile(pa + rng.uniform() * mass);
  }
  z = std::min(std::max(z, a), b);
  return mean + sd * z;
}

inline double sample_trunc_beta(double a, double b, double lo, double hi,
                                Rng& rng) {
  if (!(a > 0.0 && b > 0.0))
    throw std::domain_error("sample_trunc_beta: shapes must be > 0");
  if (!(0.0 <= lo && lo < hi && hi <= 1.0))
    throw std::domain_error("sample_trunc_beta: need 0 <= lo < hi <= 1");
  if (lo <= 0.0 && hi >= 1.0) return rng.beta(a, b);
  const double plo = lo > 0.0 ? inc_beta(a, b, lo) : 0.0;
  const double phi = hi < 1.0 ? inc_beta(a, b, hi) : 1.0;
  const double mass = phi - plo;
  if (!(mass > 1e-300)) throw std::runtime_error("empty truncation region");
  double x = inc_beta_inv(a, b, plo + rng.uniform() * mass);
  if (x <= lo) x = std::nextafter(lo, 1.0);
  if (x > hi) x = hi;
  return x;
}

}  // namespace msma
