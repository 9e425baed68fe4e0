#pragma once

// Elliptical slice sampling (Murray, Adams & MacKay 2010) for targets of the
// form zero-mean-Gaussian prior times a likelihood. Rejection-free: the
// bracket shrinks until a point above the slice level is found.

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "msma/rng.hpp"

namespace msma {

struct EssResult {
  Eigen::VectorXd state;
  double loglik = 0.0;
  int proposals = 0;
};

template <typename PriorDraw, typename LogLik>
EssResult ess_step(const Eigen::VectorXd& current, double current_loglik,
                   PriorDraw&& prior_draw, LogLik&& loglik, Rng& rng) {
  if (!std::isfinite(current_loglik))
    throw std::runtime_error("ess_step: log-likelihood not finite");
  const Eigen::VectorXd nu = prior_draw(rng);
  const double log_y = current_loglik + std::log(rng.uniform());
  double theta = rng.uniform(0.0, 2.0 * pi);
  double theta_min = theta - 2.0 * pi;
  double theta_max = theta;
  EssResult res;
  for (int it = 0; it < 1000; ++it) {
    res.state = std::cos(theta) * current + std::sin(theta) * nu;
    res.loglik = loglik(res.state);
    ++res.proposals;
    if (res.loglik > log_y) return res;
    if (theta < 0.0)
      theta_min = theta;
    else
      theta_max = theta;
    theta = rng.uniform(theta_min, theta_max);
  }
  throw std::runtime_error("ESS bracket collapse");
}

template <typename PriorDraw, typename LogLik>
EssResult ess_step(const Eigen::VectorXd& current, PriorDraw&& prior_draw,
                   LogLik&& loglik, Rng& rng) {
  return ess_step(current, loglik(current), prior_draw, loglik, rng);
}

}  // namespace msma
