#pragma once

// Monotone link machinery: equi-spaced knot grid on [-1,1], the triangular
// interpolation basis and its integral (closed form), plus the Bernstein and
// identity alternatives. A link built from nonnegative coefficients is
// nondecreasing and satisfies g(-1) = 0 for every basis kind.

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "msma/data.hpp"

namespace msma {

struct KnotGrid {
  int L = 0;
  double delta = 0.0;

  explicit KnotGrid(int intervals) : L(intervals), delta(2.0 / intervals) {
    if (intervals < 2) throw std::invalid_argument("KnotGrid: L must be >= 2");
  }
  double knot(int l) const { return delta * (l - 0.5 * L); }
  int size() const { return L + 1; }
};

struct LinkCoefficients {
  LinkKind kind = LinkKind::monotone_gp;
  VectorXd xi;  // L+1 entries; identity: a single slope
};

namespace detail {

inline double checked_index(double x) {
  if (std::fabs(x) > 1.0 + 1e-9)
    throw std::domain_error("index out of link support");
  return std::clamp(x, -1.0, 1.0);
}

// antiderivative from the left edge of the (untruncated) hat at knot l
inline double hat_antiderivative(const KnotGrid& g, int l, double t) {
  const double u = g.knot(l);
  const double a = u - g.delta, c = u + g.delta;
  if (t <= a) return 0.0;
  if (t <= u) {
    const double d = t - a;
    return d * d / (2.0 * g.delta);
  }
  if (t <= c) {
    const double d = c - t;
    return 0.5 * g.delta + (g.delta * g.delta - d * d) / (2.0 * g.delta);
  }
  return g.delta;
}

// Bernstein basis row B_{0..L,L}(y), y in [0,1]
inline void bernstein_row(int L, double y, double* out) {
  out[0] = 1.0;
  for (int j = 1; j <= L; ++j) {
    out[j] = out[j - 1] * y * (L - j + 1) / j;
  }
  // out[j] now holds C(L,j) y^j; multiply by (1-y)^{L-j}
  double pw = 1.0;
  for (int j = L; j >= 0; --j) {
    out[j] *= pw;
    pw *= (1.0 - y);
  }
}

}  // namespace detail

inline double eval_hat_basis(const KnotGrid& g, int l, double x) {
  if (l < 0 || l > g.L) throw std::out_of_range("hat basis index");
  x = detail::checked_index(x);
  const double z = (x - g.knot(l)) / g.delta;
  return std::fabs(z) <= 1.0 ? 1.0 - std::fabs(z) : 0.0;
}

// psi_l(x) = integral of the l-th hat from -1 to x; piecewise quadratic.
inline double eval_integrated_basis(const KnotGrid& g, int l, double x) {
  if (l < 0 || l > g.L) throw std::out_of_range("integrated basis index");
  x = detail::checked_index(x);
  return detail::hat_antiderivative(g, l, x) -
         detail::hat_antiderivative(g, l, -1.0);
}

inline double eval_link(const LinkCoefficients& coef, const KnotGrid& g,
                        double x) {
  x = detail::checked_index(x);
  switch (coef.kind) {
    case LinkKind::monotone_gp: {
      double acc = 0.0;
      for (int l = 0; l <= g.L; ++l)
        acc += coef.xi[l] * eval_integrated_basis(g, l, x);
      return acc;
    }
    case LinkKind::bernstein: {
      // increments xi_1..xi_L on ordered Bernstein coefficients; xi_0 is the
      // level at -1 and cancels out of g, keeping g(-1) = 0 exact
      const int L = g.L;
      const double y = 0.5 * (x + 1.0);
      Eigen::VectorXd row(L + 1);
      detail::bernstein_row(L, y, row.data());
      double cum = 0.0, acc = 0.0;
      for (int j = 1; j <= L; ++j) {
        cum += coef.xi[j];
        acc += cum * row[j];
      }
      return acc;
    }
    case LinkKind::identity:
      return coef.xi[0] * (x + 1.0);
  }
  return 0.0;
}

// O(1) repeated evaluation for the GP basis (O(L) for Bernstein), rebuilt
// whenever xi changes. Heavily used inside the likelihood loops.
class LinkEvaluator {
 public:
  LinkEvaluator(const LinkCoefficients& coef, const KnotGrid& g)
      : kind_(coef.kind), L_(g.L), delta_(g.delta) {
    switch (kind_) {
      case LinkKind::monotone_gp: {
        // prefix[s] = sum over l < s of xi_l * (full integral of hat l)
        prefix_.resize(L_ + 2);
        prefix_[0] = 0.0;
        for (int l = 0; l <= L_; ++l) {
          const double full = (l == 0 || l == L_) ? 0.5 * delta_ : delta_;
          prefix_[l + 1] = prefix_[l] + coef.xi[l] * full;
        }
        xi_ = coef.xi;
        break;
      }
      case LinkKind::bernstein: {
        cum_.resize(L_ + 1);
        cum_[0] = 0.0;
        for (int j = 1; j <= L_; ++j) cum_[j] = cum_[j - 1] + coef.xi[j];
        row_.resize(L_ + 1);
        break;
      }
      case LinkKind::identity:
        slope_ = coef.xi[0];
        break;
    }
  }

  double operator()(double x) const {
    x = detail::checked_index(x);
    switch (kind_) {
      case LinkKind::monotone_gp: {
        int seg = static_cast<int>((x + 1.0) / delta_);
        seg = std::min(std::max(seg, 0), L_ - 1);
        // u_seg <= x <= u_{seg+1}: hats below seg are fully integrated, hats
        // seg and seg+1 contribute descending/ascending partial integrals
        const double dl = x - delta_ * (seg - 0.5 * L_);
        const double d = delta_ - dl;
        const double full_seg = (seg == 0) ? 0.5 * delta_ : delta_;
        return prefix_[seg] +
               xi_[seg] * (full_seg - d * d / (2.0 * delta_)) +
               xi_[seg + 1] * (dl * dl / (2.0 * delta_));
      }
      case LinkKind::bernstein: {
        const double y = 0.5 * (x + 1.0);
        detail::bernstein_row(L_, y, row_.data());
        double acc = 0.0;
        for (int j = 1; j <= L_; ++j) acc += cum_[j] * row_[j];
        return acc;
      }
      case LinkKind::identity:
        return slope_ * (x + 1.0);
    }
    return 0.0;
  }

 private:
  LinkKind kind_;
  int L_;
  double delta_;
  VectorXd xi_;
  std::vector<double> prefix_;
  std::vector<double> cum_;
  mutable std::vector<double> row_;
  double slope_ = 0.0;
};

// exp(g(beta_l) - g(0)): multiplicative effect on the expected survival time
// of a unit change in covariate l.
inline double covariate_effect(const LinkCoefficients& coef, const KnotGrid& g,
                               const VectorXd& beta, int l) {
  return std::exp(eval_link(coef, g, beta[l]) - eval_link(coef, g, 0.0));
}

}  // namespace msma
