#include <cmath>

#include "calc.hpp"

namespace semihilb {

namespace {

double prod_first_form(double beta, double phi, double rho) {
  return (1.0 + 2.0 * beta) / (16.0 * (beta + 1.0)) * phi * phi + (3.0 + 2.0 * beta) / (8.0 * (beta + 1.0)) * phi * rho;
}

double prod_second_form(double beta, double phi, double rho) {
  return (1.0 + 2.0 * beta) / (8.0 * (beta + 1.0)) * phi * phi + rho * rho / (2.0 * (beta + 1.0));
}

}  // namespace

BoundReport check_product_bound(const SemiInnerContext& ctx, const std::string& id, const Operands& operators,
                                const BoundParams& params) {
  const RegistryEntry& entry = registry_entry(id);
  if (entry.family != Family::product) throw Error(ErrorCode::UnknownId, id + " is not a product bound");
  validate_params(entry, params);
  const Eigen::Index n = ctx.dim();
  const detail::ACalc c(ctx);
  const double r = params.r;
  const double beta = params.beta;
  std::map<std::string, double> im;
  double lhs = 0.0;
  double rhs = 0.0;
  bool hyp = true;

  if (id == "prod1" || id == "prod2") {
    const CMatrix& t1 = detail::require_operand(operators, "T1", n, id);
    const CMatrix& t2 = detail::require_operand(operators, "T2", n, id);
    const CMatrix& s1 = detail::require_operand(operators, "S1", n, id);
    const CMatrix& s2 = detail::require_operand(operators, "S2", n, id);
    hyp = c.in_domain(t1) && c.in_domain(t2) && c.in_domain(s1) && c.in_domain(s2);
    const SemiInnerContext ctx2 = dsum_context(ctx, 2);
    const detail::ACalc c2(ctx2);
    const CMatrix t = assemble(BlockSpec::antidiag(t1, t2));
    const CMatrix s = assemble(BlockSpec::antidiag(s1, s2));
    const double w = c2.radius(c2.adj(s) * t);
    const double phi = c.norm(c.abs_pow(t2, 4.0 * r) + c.abs_pow(s2, 4.0 * r));
    const double psi = c.norm(c.abs_pow(t1, 4.0 * r) + c.abs_pow(s1, 4.0 * r));
    const double rho = std::pow(c.radius(c.adj(s2) * s2 * c.adj(t2) * t2), r);
    const double theta = std::pow(c.radius(c.adj(s1) * s1 * c.adj(t1) * t1), r);
    const double mp = std::max(phi, psi);
    const double mr = std::max(rho, theta);
    lhs = std::pow(w, 4.0 * r);
    rhs = id == "prod1" ? prod_first_form(beta, mp, mr) : prod_second_form(beta, mp, mr);
    im = {{"w", w}, {"phi_r", phi}, {"psi_r", psi}, {"rho_r", rho}, {"theta_r", theta}};
  } else {
    const CMatrix& f = detail::require_operand(operators, "F", n, id);
    const CMatrix& k = detail::require_operand(operators, "K", n, id);
    hyp = c.in_domain(f) && c.in_domain(k);
    const CMatrix ks = c.adj(k);
    const double w = c.radius(ks * f);
    const double phi = c.norm(c.abs_pow(f, 4.0 * r) + c.abs_pow(k, 4.0 * r));
    const double wprod = c.radius(ks * k * c.adj(f) * f);
    const double rho = std::pow(wprod, r);
    im = {{"w", w}, {"phi_r", phi}, {"rho_r", rho}};
    if (id == "cor_prod") {
      lhs = std::pow(w, 4.0 * r);
      rhs = prod_first_form(beta, phi, rho);
    } else if (id == "cor_prod_a") {
      lhs = std::pow(w, 4.0 * r);
      rhs = prod_second_form(beta, phi, rho);
    } else {
      lhs = std::pow(w, 2.0 * r);
      rhs = 0.5 * phi;
      im["eq_power_lhs"] = std::pow(wprod, 2.0 * r);
      im["eq_power_rhs"] = 0.25 * phi * phi;
      im["eq_power_4r_lhs"] = std::pow(w, 4.0 * r);
      im["eq_power_4r_rhs"] = 0.25 * phi * phi;
    }
  }
  BoundReport rep = make_report(id, lhs, rhs, params);
  rep.intermediates = std::move(im);
  rep.hypotheses_ok = hyp;
  return rep;
}

}  // namespace semihilb
