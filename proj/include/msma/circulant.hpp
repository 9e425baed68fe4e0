#pragma once

// Stationary Gaussian draws on an equi-spaced grid via circulant embedding
// of the Toeplitz covariance: eigenvalues come from one FFT of the embedded
// kernel row, and each draw costs one FFT of length M = O(L), so sampling is
// O(L log L) instead of the O(L^3) of a dense factorization.

#include <fftw3.h>

#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "msma/matern.hpp"
#include "msma/rng.hpp"

namespace msma {

namespace detail {
// FFTW plan creation mutates global planner state; execution is thread-safe.
inline std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

class CirculantGpSampler {
 public:
  // kernel(r) must be the stationary correlation at distance r; `points` is
  // the grid size (L+1) and `spacing` the grid step.
  CirculantGpSampler(const std::function<double(double)>& kernel,
                     double spacing, int points)
      : n_(points) {
    if (points < 2)
      throw std::invalid_argument("CirculantGpSampler: need >= 2 grid points");
    const int base = 2 * (points - 1);
    // doubling the embedding repairs most indefinite cases; clamp only tiny
    // negative eigenvalues at the cap
    for (int factor = 1; factor <= 8; factor *= 2) {
      m_ = base * factor;
      std::vector<double> row(m_);
      for (int j = 0; j < m_; ++j)
        row[j] = kernel(spacing * std::min(j, m_ - j));
      if (build_eigenvalues(row, factor == 8)) break;
    }
    alloc();
  }

  ~CirculantGpSampler() { release(); }

  CirculantGpSampler(const CirculantGpSampler&) = delete;
  CirculantGpSampler& operator=(const CirculantGpSampler&) = delete;

  // One draw from N(0, tau2 * K). Not reentrant: use one sampler per chain.
  VectorXd draw(double tau2, Rng& rng) {
    const double s = std::sqrt(tau2 / m_);
    for (int k = 0; k < m_; ++k) {
      in_[k][0] = sqrt_eval_[k] * rng.normal();
      in_[k][1] = sqrt_eval_[k] * rng.normal();
    }
    fftw_execute(plan_);
    VectorXd out(n_);
    for (int j = 0; j < n_; ++j) out[j] = s * out_[j][0];
    return out;
  }

  int embedding_size() const { return m_; }
  const std::vector<double>& eigenvalues() const { return eval_; }

 private:
  bool build_eigenvalues(const std::vector<double>& row, bool last_chance) {
    // eigenvalues of the circulant are the DFT of its first row
    fftw_complex* buf;
    fftw_plan plan;
    {
      std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
      buf = fftw_alloc_complex(m_);
      plan = fftw_plan_dft_1d(m_, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    for (int j = 0; j < m_; ++j) {
      buf[j][0] = row[j];
      buf[j][1] = 0.0;
    }
    fftw_execute(plan);
    eval_.assign(m_, 0.0);
    double max_ev = 0.0, min_ev = 0.0;
    for (int k = 0; k < m_; ++k) {
      eval_[k] = buf[k][0];
      max_ev = std::max(max_ev, eval_[k]);
      min_ev = std::min(min_ev, eval_[k]);
    }
    {
      std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
      fftw_destroy_plan(plan);
      fftw_free(buf);
    }
    if (min_ev < 0.0) {
      if (!last_chance) return false;
      if (-min_ev > 1e-10 * max_ev)
        throw std::runtime_error("embedding not nonnegative definite");
      for (double& ev : eval_)
        if (ev < 0.0) ev = 0.0;
    }
    sqrt_eval_.resize(m_);
    for (int k = 0; k < m_; ++k) sqrt_eval_[k] = std::sqrt(eval_[k]);
    return true;
  }

  void alloc() {
    std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
    in_ = fftw_alloc_complex(m_);
    out_ = fftw_alloc_complex(m_);
    plan_ = fftw_plan_dft_1d(m_, in_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  void release() {
    std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
    if (plan_) fftw_destroy_plan(plan_);
    if (in_) fftw_free(in_);
    if (out_) fftw_free(out_);
  }

  int n_ = 0, m_ = 0;
  std::vector<double> eval_, sqrt_eval_;
  fftw_complex* in_ = nullptr;
  fftw_complex* out_ = nullptr;
  fftw_plan plan_ = nullptr;
};

// Convenience wrapper matching the grid/kernel pairing used by the link prior.
inline VectorXd sample_stationary_gp(const MaternKernel& kernel,
                                     const KnotGrid& grid, double tau2,
                                     Rng& rng) {
  CirculantGpSampler sampler([&](double r) { return kernel(r); }, grid.delta,
                             grid.size());
  return sampler.draw(tau2, rng);
}

}  // namespace msma
