#include <cmath>

#include "calc.hpp"

namespace semihilb {

namespace {

using detail::ACalc;
using detail::power0;

CMatrix classical_abs_pow(const CMatrix& t, double p) {
  return psd_power(CMatrix(t.adjoint() * t), p / 2.0);
}

}  // namespace

BoundReport check_matrix_bound(const SemiInnerContext& ctx, const std::string& id, const Operands& blocks,
                               const BoundParams& params) {
  const RegistryEntry& entry = registry_entry(id);
  if (entry.family != Family::matrix) throw Error(ErrorCode::UnknownId, id + " is not a block-matrix bound");
  validate_params(entry, params);
  const Eigen::Index n = ctx.dim();
  const CMatrix& x = detail::require_operand(blocks, "X", n, id);
  const CMatrix& y = detail::require_operand(blocks, "Y", n, id);
  const bool full = id == "kz" || id == "modified_kz";

  const ACalc c(ctx);
  const SemiInnerContext ctx2 = dsum_context(ctx, 2);
  const ACalc c2(ctx2);
  bool hyp = c.in_domain(x) && c.in_domain(y);

  const double r = params.r;
  const double lam = params.lam;
  const double beta = params.beta;
  const auto k = detail::buzano_constants(params.alpha, beta);
  std::map<std::string, double> im;
  double lhs = 0.0;
  double rhs = 0.0;

  if (full) {
    const CMatrix& f = detail::require_operand(blocks, "F", n, id);
    const CMatrix& kk = detail::require_operand(blocks, "K", n, id);
    hyp = hyp && c.in_domain(f) && c.in_domain(kk);
    const double w = c2.radius(assemble(BlockSpec::full(f, x, y, kk)));
    const double wr = c2.radius(assemble(BlockSpec::antidiag(CMatrix(x * kk), CMatrix(y * f))));
    const CMatrix ff = c.adj(f) * f;
    const CMatrix xx = x * c.adj(x);
    const CMatrix kk2 = c.adj(kk) * kk;
    const CMatrix yy = y * c.adj(y);
    const double a = c.norm(ff * ff + xx * xx);
    const double b = c.norm(kk2 * kk2 + yy * yy);
    const double cc = c.norm(ff + xx);
    const double d = c.norm(kk2 + yy);
    const double mab = std::max(a, b);
    const double mcd = std::max(cc, d);
    lhs = std::pow(w, 4);
    if (id == "kz") {
      rhs = (2.0 + 4.0 * k.chi1) * mab + 2.0 * wr * wr + 4.0 * k.chi2 * mcd * wr;
      im["audit_rhs_proof_form"] = (2.0 + 4.0 * k.chi1) * mab + 4.0 * wr * wr + 4.0 * k.chi2 * mcd * wr;
    } else {
      const double mu = params.mu;
      rhs = (2.0 + 2.0 * k.chi1 + 2.0 * k.chi3) * mab + (2.0 * k.chi2 + 2.0 * mu * k.chi4) * mcd * wr +
            (4.0 + 4.0 * (1.0 - mu) * k.chi4) * wr * wr;
      im["chi3"] = k.chi3;
      im["chi4"] = k.chi4;
    }
    im["w"] = w;
    im["w_R"] = wr;
    im["a"] = a;
    im["b"] = b;
    im["c"] = cc;
    im["d"] = d;
    im["chi1"] = k.chi1;
    im["chi2"] = k.chi2;
  } else {
    const double w = c2.radius(assemble(BlockSpec::antidiag(x, y)));
    im["w"] = w;
    const CMatrix xs = c.adj(x);
    const CMatrix ys = c.adj(y);
    if (id == "thm_2_7") {
      const double u = c.norm(c.abs_pow(x, 2.0 * lam));
      const double v = c.norm(c.abs_pow(ys, 2.0 * (1.0 - lam)));
      lhs = w;
      rhs = 0.5 * (u + v);
      im["norm_abs_x_pow"] = u;
      im["norm_abs_yadj_pow"] = v;
    } else if (id == "thm_2_8") {
      const double u = c.norm(x);
      const double v = c.norm(ys);
      const RefinedAlphaResult best = detail::refined_alpha_min(u, v);
      lhs = w;
      rhs = refined_alpha_objective(u, v, lam);
      im["norm_x"] = u;
      im["norm_yadj"] = v;
      im["inf_bound"] = best.bound;
      im["lam_star"] = best.lam_star;
    } else if (id == "thm_2_10" || id == "cor_2_11" || id == "rem_2_12") {
      const double rr = id == "rem_2_12" ? 1.0 : r;
      const double ll = id == "rem_2_12" ? 0.5 : lam;
      const double ef = 2.0 * ll * rr;
      const double eg = 2.0 * rr * (1.0 - ll);
      CMatrix p1;
      CMatrix p2;
      if (id == "thm_2_10") {
        auto f2r = [ll, rr](double t) { return std::pow(power0(t, ll), 2.0 * rr); };
        auto g2r = [ll, rr](double t) { return std::pow(power0(t, 1.0 - ll), 2.0 * rr); };
        p1 = a_abs_function(ctx, x, f2r) + a_abs_function(ctx, ys, g2r);
        p2 = a_abs_function(ctx, y, f2r) + a_abs_function(ctx, xs, g2r);
        const CMatrix p2c = classical_abs_pow(y, ef) + classical_abs_pow(xs, eg);
        const double w2c = classical_numerical_radius(p2c, 1e-8 * std::max(1.0, spectral_norm(p2c)));
        im["audit_rhs_classical_reading"] = std::pow(2.0, rr - 2.0) * std::sqrt(c.radius(p1)) * std::sqrt(w2c);
      } else {
        p1 = c.abs_pow(x, ef) + c.abs_pow(ys, eg);
        p2 = c.abs_pow(y, ef) + c.abs_pow(xs, eg);
      }
      const double w1 = c.radius(p1);
      const double w2 = c.radius(p2);
      lhs = std::pow(w, rr);
      rhs = std::pow(2.0, rr - 2.0) * std::sqrt(w1) * std::sqrt(w2);
      im["w_first"] = w1;
      im["w_second"] = w2;
    } else if (id == "moby_a1") {
      const double n1 = c.norm(xs * x + y * ys);
      const double n2 = c.norm(x * xs + ys * y);
      const double wxy = c.radius(x * y);
      const double wyx = c.radius(y * x);
      lhs = std::pow(w, 4);
      rhs = k.delta1 / 4.0 * std::max(n1 * n1, n2 * n2) + k.delta2 * std::max(wxy * wxy, wyx * wyx);
      im["delta1"] = k.delta1;
      im["delta2"] = k.delta2;
      im["norm_first"] = n1;
      im["norm_second"] = n2;
      im["w_xy"] = wxy;
      im["w_yx"] = wyx;
    } else if (id == "ramadan1" || id == "thm_beta" || id == "thm_alpha") {
      const auto lm = detail::lambda_mu(c, x, y, r);
      const double wxy = c.radius(x * y);
      const double wyx = c.radius(y * x);
      const double mx = std::max(lm.lambda, lm.mu);
      const double wmax = std::max(std::pow(wxy, r), std::pow(wyx, r));
      if (id == "ramadan1") {
        lhs = std::pow(w, 4.0 * r);
        rhs = (2.0 * beta + 1.0) / (16.0 * (beta + 1.0)) * mx * mx + (2.0 * beta + 3.0) / (8.0 * (beta + 1.0)) * mx * wmax;
      } else if (id == "thm_beta") {
        lhs = std::pow(w, 4.0 * r);
        rhs = (2.0 * beta + 1.0) / (8.0 * (beta + 1.0)) * mx * mx + wmax * wmax / (2.0 * (beta + 1.0));
      } else {
        const double aa = std::abs(params.alpha);
        lhs = std::pow(w, 2.0 * r);
        rhs = std::pow(2.0, r - 2.0) * std::pow(k.m, r) / std::pow(aa, r) * mx +
              std::pow(2.0, r - 1.0) / std::pow(aa, r) * wmax;
      }
      im["lambda_r"] = lm.lambda;
      im["mu_r"] = lm.mu;
      im["w_xy"] = wxy;
      im["w_yx"] = wyx;
    } else {
      const auto lm = detail::lambda_mu(c, x, y, r);
      const double p = params.p;
      const double q = params.q;
      const CMatrix xy = x * y;
      const CMatrix yx = y * x;
      const double rho = c.norm(c.abs_pow(xy, lam * p * r) / p + c.abs_pow(CMatrix(ys * xs), (1.0 - lam) * q * r) / q);
      const double sigma = c.norm(c.abs_pow(yx, lam * p * r) / p + c.abs_pow(CMatrix(xs * ys), (1.0 - lam) * q * r) / q);
      const double g1 = (2.0 * beta + 1.0) / (4.0 * (beta + 1.0));
      const double g2 = (2.0 * beta + 3.0) / (4.0 * (beta + 1.0));
      const double mx = std::max(lm.lambda, lm.mu);
      const double mrs = std::max(rho, sigma);
      lhs = std::pow(w, 4.0 * r);
      rhs = g1 / 16.0 * mx * mx + g2 / 8.0 * mx * mrs;
      im["audit_rhs_proof_form"] = 4.0 * g1 / 16.0 * mx * mx + 4.0 * g2 / 8.0 * mx * mrs;
      im["lambda_r"] = lm.lambda;
      im["delta_r"] = lm.mu;
      im["rho_r"] = rho;
      im["sigma_r"] = sigma;
      im["gamma1"] = g1;
      im["gamma2"] = g2;
    }
  }
  BoundReport rep = make_report(id, lhs, rhs, params);
  rep.intermediates = std::move(im);
  rep.hypotheses_ok = hyp;
  return rep;
}

}  // namespace semihilb
