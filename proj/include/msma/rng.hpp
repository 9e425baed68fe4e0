#pragma once

// Random draws for the samplers. All transforms are implemented on top of
// the raw mt19937_64 stream (no std::*_distribution), so a fixed seed gives
// the same draws on every platform and standard library.

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "msma/stats.hpp"

namespace msma {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform on (0,1), never returns an endpoint
  double uniform() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() { return norm_quantile(uniform()); }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  double exponential(double rate = 1.0) { return -std::log(uniform()) / rate; }

  // Marsaglia-Tsang; shape/rate parameterization (mean = shape/rate)
  double gamma(double shape, double rate = 1.0) {
    if (shape <= 0.0 || rate <= 0.0)
      throw std::domain_error("gamma: shape and rate must be > 0");
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
        return d * v / rate;
    }
  }

  double inverse_gamma(double shape, double rate) {
    return 1.0 / gamma(shape, 1.0) * rate;
  }

  double chi_squared(double df) { return gamma(0.5 * df, 0.5); }

  double beta(double a, double b) {
    const double x = gamma(a, 1.0);
    const double y = gamma(b, 1.0);
    return x / (x + y);
  }

  double student_t(double df) {
    return normal() / std::sqrt(chi_squared(df) / df);
  }

  // index into unnormalized nonnegative weights
  int categorical(const double* w, int n) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += w[i];
    if (!(total > 0.0))
      throw std::runtime_error("categorical: weights sum to zero");
    double u = uniform() * total;
    for (int i = 0; i < n; ++i) {
      u -= w[i];
      if (u <= 0.0) return i;
    }
    return n - 1;
  }

  Eigen::VectorXd dirichlet(const Eigen::VectorXd& alpha) {
    Eigen::VectorXd out(alpha.size());
    double total = 0.0;
    for (int i = 0; i < alpha.size(); ++i) {
      out[i] = gamma(alpha[i], 1.0);
      total += out[i];
    }
    if (!(total > 0.0)) {
      // all gammas underflowed (tiny shapes); fall back to the largest shape
      int imax = 0;
      alpha.maxCoeff(&imax);
      out.setZero();
      out[imax] = 1.0;
      return out;
    }
    return out / total;
  }

  Eigen::VectorXd gaussian_vector(int n) {
    Eigen::VectorXd z(n);
    for (int i = 0; i < n; ++i) z[i] = normal();
    return z;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace msma
