#pragma once

// Data model shared by the whole engine: the current-status dataset, the
// intraoral spatial graph, and the model-variant configuration.

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "msma/stats.hpp"

namespace msma {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// One row per subject-tooth pair; states form a progressive chain 0..K
// with K absorbing, observed once at a positive inspection time.
struct CurrentStatusDataset {
  int n = 0;  // subjects
  int m = 0;  // teeth per subject (even)
  int K = 0;  // absorbing state index
  int p = 0;  // covariates
  std::vector<std::string> covariate_names;
  MatrixXd x;         // (n*m) x p, rescaled so max row norm is 1
  VectorXd c;         // inspection times, length n*m
  std::vector<int> s; // observed states, length n*m

  int idx(int i, int j) const { return i * m + j; }
  int count() const { return n * m; }
};

struct Violation {
  int i = -1, j = -1;
  std::string field;
  std::string message;
};

inline std::vector<Violation> validate_dataset(const CurrentStatusDataset& ds) {
  std::vector<Violation> out;
  auto add = [&](int i, int j, const char* field, std::string msg) {
    out.push_back({i, j, field, std::move(msg)});
  };
  if (ds.m % 2 != 0 || ds.m < 2) add(-1, -1, "m", "teeth count must be even");
  if (ds.K < 1) add(-1, -1, "K", "need at least one transient state");
  if (ds.x.rows() != ds.count() || ds.c.size() != ds.count() ||
      static_cast<int>(ds.s.size()) != ds.count()) {
    add(-1, -1, "shape", "field sizes disagree with n*m");
    return out;
  }
  for (int i = 0; i < ds.n; ++i) {
    for (int j = 0; j < ds.m; ++j) {
      const int r = ds.idx(i, j);
      if (ds.x.row(r).norm() > 1.0 + 1e-9)
        add(i, j, "covariates", "norm exceeds 1");
      if (!(ds.c[r] > 0.0)) add(i, j, "inspection_time", "must be positive");
      if (ds.s[r] < 0 || ds.s[r] > ds.K)
        add(i, j, "state", "outside 0..K");
    }
  }
  return out;
}

// Divides every covariate vector by the largest norm in the dataset, so the
// single index lives in [-1,1]. The factor is kept so that prediction
// profiles can be rescaled identically.
inline std::pair<MatrixXd, double> rescale_covariates(const MatrixXd& raw) {
  double factor = 0.0;
  for (int r = 0; r < raw.rows(); ++r)
    factor = std::max(factor, raw.row(r).norm());
  if (!(factor > 0.0)) throw std::invalid_argument("degenerate covariates");
  return {raw / factor, factor};
}

// Path graph over one jaw; teeth j and m-1-j (0-based) share an effect.
struct SpatialGraph {
  int half = 0;  // m/2
  MatrixXd W;    // adjacency of the path graph on `half` nodes
  MatrixXd E;    // diagonal neighbor counts
  MatrixXd Z;    // m x half duplication design, [I; anti-diagonal]

  int pair_of(int j) const { return j < half ? j : 2 * half - 1 - j; }
};

inline SpatialGraph build_spatial_graph(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("build_spatial_graph: m must be even and >= 2");
  if (m == 2)
    throw std::invalid_argument("graph too small for CAR scale");
  SpatialGraph g;
  g.half = m / 2;
  g.W = MatrixXd::Zero(g.half, g.half);
  for (int j = 0; j + 1 < g.half; ++j) {
    g.W(j, j + 1) = 1.0;
    g.W(j + 1, j) = 1.0;
  }
  g.E = g.W.rowwise().sum().asDiagonal();
  g.Z = MatrixXd::Zero(m, g.half);
  for (int j = 0; j < m; ++j) g.Z(j, g.pair_of(j)) = 1.0;
  return g;
}

// CAR-centered scale matrix S = (E - rho W)^{-1} for the inverse-Wishart prior.
inline MatrixXd car_scale_matrix(const SpatialGraph& g, double rho) {
  return (g.E - rho * g.W).inverse();
}

enum class LinkKind { monotone_gp, bernstein, identity };
enum class ErrorKind { dp_mixture, gaussian };
enum class EffectKind { spatial, subject_level };

struct ModelConfig {
  LinkKind link_kind = LinkKind::monotone_gp;
  ErrorKind error_kind = ErrorKind::dp_mixture;
  EffectKind effect_kind = EffectKind::spatial;

  int L = 30;  // knot intervals of the link basis
  int H = 10;  // DP mixture truncation level

  double sigma_beta2 = 100.0;
  double nu = 0.75;       // Matern smoothness
  double ell = 0.0;       // Matern length-scale; 0 = solve for corr 0.05 at max separation
  double eta = 100.0;     // sharpness of the soft nonnegativity constraint
  double a_xi = 0.01, b_xi = 0.01;
  double rho = 0.9;       // spatial dependence in the CAR scale
  double mu_eps = 0.0, nu_eps = 1.0;
  double a_eps = 2.001, lambda_eps = 0.1001;   // prior mean 0.1, variance 10 for s_h^2
  double a_gamma = 0.1, b_gamma = 0.1;         // mean 1, variance 10
  double a_alpha = 0.01, lambda_alpha = 0.01;  // mean 1, variance 100
  double omega_scale = 10.0;                   // half-normal scale, identity link
  double a_b = 2.001, b_b = 0.1001;            // subject-level effect variance prior

  std::string validate() const {
    if (L < 2) return "L must be >= 2";
    if (H < 1) return "H must be >= 1";
    if (!(rho > 0.0 && rho < 1.0)) return "rho must lie in (0,1)";
    if (!(eta > 0.0)) return "eta must be positive";
    if (!(nu > 0.0)) return "nu must be positive";
    if (ell < 0.0) return "ell must be nonnegative";
    for (double v : {sigma_beta2, a_xi, b_xi, nu_eps, a_eps, lambda_eps,
                     a_gamma, b_gamma, a_alpha, lambda_alpha, omega_scale,
                     a_b, b_b})
      if (!(v > 0.0)) return "hyperparameters must be positive";
    return {};
  }
};

// The six fitted variants, by their reporting labels.
inline ModelConfig model_config_by_name(const std::string& name) {
  ModelConfig cfg;
  if (name == "s-gp-dp") {
  } else if (name == "s-bp-dp") {
    cfg.link_kind = LinkKind::bernstein;
  } else if (name == "s-gp-n") {
    cfg.error_kind = ErrorKind::gaussian;
    cfg.H = 1;
  } else if (name == "s-bp-n") {
    cfg.link_kind = LinkKind::bernstein;
    cfg.error_kind = ErrorKind::gaussian;
    cfg.H = 1;
  } else if (name == "s-lin-dp") {
    cfg.link_kind = LinkKind::identity;
  } else if (name == "ns-gp-dp") {
    cfg.effect_kind = EffectKind::subject_level;
  } else {
    throw std::invalid_argument("unknown model name: " + name);
  }
  return cfg;
}

inline std::string link_kind_name(LinkKind k) {
  switch (k) {
    case LinkKind::monotone_gp: return "monotone_gp";
    case LinkKind::bernstein: return "bernstein";
    case LinkKind::identity: return "identity";
  }
  return {};
}

inline std::string error_kind_name(ErrorKind k) {
  return k == ErrorKind::dp_mixture ? "dp_mixture" : "gaussian";
}

inline std::string effect_kind_name(EffectKind k) {
  return k == EffectKind::spatial ? "spatial" : "subject_level";
}

}  // namespace msma
