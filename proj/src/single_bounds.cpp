#include <cmath>

#include "calc.hpp"

namespace semihilb {

BoundReport check_single_operator_bound(const SemiInnerContext& ctx, const std::string& id, const CMatrix& m,
                                        const BoundParams& params) {
  const RegistryEntry& entry = registry_entry(id);
  if (entry.family != Family::single) throw Error(ErrorCode::UnknownId, id + " is not a single-operator bound");
  validate_params(entry, params);
  const Eigen::Index n = ctx.dim();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::DimensionMismatch, id + ": operand shape differs from the weight");

  const detail::ACalc c(ctx);
  const double r = params.r;
  const double beta = params.beta;
  const auto k = detail::buzano_constants(params.alpha, beta);
  const CMatrix ms = c.adj(m);
  const CMatrix m2 = m * m;
  const double w = c.radius(m);
  const double w2 = c.radius(m2);
  std::map<std::string, double> im{{"w", w}, {"w_m2", w2}};
  double lhs = 0.0;
  double rhs = 0.0;

  if (id == "moby_a2") {
    const double s = c.norm(ms * m + m * ms);
    lhs = std::pow(w, 4);
    rhs = k.delta1 / 4.0 * s * s + k.delta2 * w2 * w2;
    im["delta1"] = k.delta1;
    im["delta2"] = k.delta2;
    im["norm_sum"] = s;
    im["rhs_zamani_chain"] = 0.25 * s * s;
  } else if (id == "ramadan1_cor" || id == "mohd1" || id == "alpha_cor") {
    const double s = c.norm(c.abs_pow(m, 2.0 * r) + c.abs_pow(ms, 2.0 * r));
    const double wr = std::pow(w2, r);
    im["s_r"] = s;
    if (id == "ramadan1_cor") {
      lhs = std::pow(w, 4.0 * r);
      rhs = (2.0 * beta + 1.0) / (16.0 * (beta + 1.0)) * s * s + (2.0 * beta + 3.0) / (8.0 * (beta + 1.0)) * s * wr;
    } else if (id == "mohd1") {
      lhs = std::pow(w, 4.0 * r);
      rhs = (2.0 * beta + 1.0) / (8.0 * (beta + 1.0)) * s * s + wr * wr / (2.0 * (beta + 1.0));
      im["rhs_beta_limit"] = 0.25 * s * s;
    } else {
      const double aa = std::abs(params.alpha);
      lhs = std::pow(w, 2.0 * r);
      rhs = std::pow(2.0, r - 2.0) * std::pow(k.m, r) / std::pow(aa, r) * s + std::pow(2.0, r - 1.0) / std::pow(aa, r) * wr;
      im["rhs_alpha_limit"] = 0.5 * c.norm(m * ms + ms * m);
      im["lhs_alpha_limit"] = w * w;
    }
  } else {
    const CMatrix p = ms * m;
    const CMatrix q = m * ms;
    const double a = c.norm(p * p + q * q);
    const double cc = c.norm(p + q);
    lhs = std::pow(w, 4);
    if (id == "college1") {
      rhs = (1.0 + 2.0 * k.chi1) / 8.0 * a + w2 * w2 / 8.0 + k.chi2 / 4.0 * cc * w2;
      im["audit_rhs_printed_form"] = (1.0 + 2.0 * k.chi1) / 8.0 * a + w2 / 8.0 + k.chi2 / 4.0 * cc * w2;
      im["audit_rhs_alpha2_display"] = (4.0 * beta + 3.0) / (32.0 * (beta + 1.0)) * a + w2 / 8.0 +
                                       (2.0 * beta + 3.0) / (16.0 * (beta + 1.0)) * cc * w2;
      im["audit_rhs_proof_form"] = (1.0 + 2.0 * k.chi1) / 8.0 * a + w2 * w2 / 4.0 + k.chi2 / 4.0 * cc * w2;
    } else {
      const double mu = params.mu;
      rhs = (1.0 + k.chi1 + k.chi3) / 8.0 * a + (k.chi2 + mu * k.chi4) / 8.0 * cc * w2 +
            (1.0 + (1.0 - mu) * k.chi4) / 4.0 * w2 * w2;
      im["audit_rhs_alpha2_display"] = (3.0 * beta + 2.0) / (16.0 * (beta + 1.0)) * a +
                                       (2.0 * beta + 2.0 * mu + 3.0) / (32.0 * (beta + 1.0)) * cc * w2 +
                                       (3.0 - 2.0 * mu) / (16.0 * (beta + 1.0)) * w2 * w2;
      im["chi3"] = k.chi3;
      im["chi4"] = k.chi4;
    }
    im["a"] = a;
    im["c"] = cc;
    im["chi1"] = k.chi1;
    im["chi2"] = k.chi2;
  }
  BoundReport rep = make_report(id, lhs, rhs, params);
  rep.intermediates = std::move(im);
  rep.hypotheses_ok = c.in_domain(m);
  return rep;
}

}  // namespace semihilb
