#pragma once

// Shared evaluation helpers for the inequality checkers.

#include <algorithm>
#include <cmath>

#include "semihilb/block.hpp"
#include "semihilb/context.hpp"
#include "semihilb/inequalities.hpp"

namespace semihilb::detail {

/// Buzano-family constants for a given (alpha, beta).
struct BuzanoConstants {
  double m;       ///< max{1, |alpha - 1|}
  double delta1;
  double delta2;
  double chi1;
  double chi2;
  double chi3;
  double chi4;
};

inline BuzanoConstants buzano_constants(cplx alpha, double beta) {
  const double m = std::max(1.0, std::abs(alpha - 1.0));
  const double den = std::norm(alpha) * (beta + 1.0);
  BuzanoConstants c{};
  c.m = m;
  c.delta1 = (2.0 * (beta + 1.0) * m * m + 2.0 * beta) / den;
  c.delta2 = 2.0 / den;
  c.chi1 = (beta + (beta + 1.0) * m * m) / den;
  c.chi2 = (1.0 + 2.0 * (beta + 1.0) * m) / den;
  c.chi3 = (2.0 * beta + 2.0 * (beta + 1.0) * m * m) / den;
  c.chi4 = 2.0 / den;
  return c;
}

/// t^e with 0^0 = 0.
inline double power0(double t, double e) { return t > 0.0 ? std::pow(t, e) : 0.0; }

/// A-geometry evaluator bound to one context.
class ACalc {
 public:
  explicit ACalc(const SemiInnerContext& ctx) : ctx_(ctx) {}

  const SemiInnerContext& ctx() const { return ctx_; }
  CMatrix adj(const CMatrix& t) const { return a_adjoint(ctx_, t); }
  double norm(const CMatrix& t) const { return op_seminorm(ctx_, t); }
  double radius(const CMatrix& t) const {
    const CMatrix r = reduce(ctx_, t).tilde;
    const double scale = spectral_norm(r);
    return classical_numerical_radius(r, 1e-8 * std::max(1.0, scale));
  }
  /// S^p for an A-positive S built by the caller (e.g. Y^# Y).
  CMatrix pos_pow(const CMatrix& s, double p) const {
    const CMatrix r = reduce(ctx_, s).tilde;
    return pullback(ctx_, psd_power(CMatrix((r + r.adjoint()) / 2.0), p));
  }
  CMatrix abs_pow(const CMatrix& t, double p) const { return a_abs_power(ctx_, t, p); }
  bool in_domain(const CMatrix& t) const { return preserves_kernel(ctx_, t); }

 private:
  const SemiInnerContext& ctx_;
};

const CMatrix& require_operand(const Operands& ops, const std::string& name, Eigen::Index n,
                               const std::string& id);

}  // namespace semihilb::detail

namespace semihilb::detail {

/// lambda_r = ||(Y^# Y)^r + (X X^#)^r||_A and mu_r = ||(Y Y^#)^r + (X^# X)^r||_A.
struct LambdaMu {
  double lambda;
  double mu;
};

inline LambdaMu lambda_mu(const ACalc& c, const CMatrix& x, const CMatrix& y, double r) {
  const CMatrix xs = c.adj(x);
  const CMatrix ys = c.adj(y);
  return {c.norm(c.abs_pow(y, 2.0 * r) + c.abs_pow(xs, 2.0 * r)),
          c.norm(c.abs_pow(ys, 2.0 * r) + c.abs_pow(x, 2.0 * r))};
}

/// Minimizer of refined_alpha_objective(u, v, .) over [0, 1].
RefinedAlphaResult refined_alpha_min(double u, double v);

}  // namespace semihilb::detail
