#include <algorithm>
#include <cmath>

#include "calc.hpp"

namespace semihilb {

namespace pb = param_bits;

BoundReport make_report(std::string id, double lhs, double rhs, const BoundParams& params) {
  BoundReport rep;
  rep.inequality_id = std::move(id);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = rhs - lhs;
  rep.rel_slack = rep.slack / std::max(1.0, std::abs(rhs));
  rep.params = params;
  return rep;
}

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = [] {
    using F = Family;
    const std::vector<std::string> xy{"X", "Y"};
    const std::vector<std::string> fxyk{"F", "X", "Y", "K"};
    const std::vector<std::string> m{"M"};
    const std::vector<std::string> quad{"T1", "T2", "S1", "S2"};
    const std::vector<std::string> fk{"F", "K"};
    const std::vector<std::string> abe{"a", "b", "e"};
    std::vector<RegistryEntry> v = {
        {"jensen", F::scalar, {}, pb::lam | pb::r, OperandClass::any, false,
         "a^lam b^(1-lam) <= lam a + (1-lam) b <= (lam a^r + (1-lam) b^r)^(1/r)"},
        {"bohr", F::scalar, {}, pb::r, OperandClass::any, false,
         "(sum a_i)^r <= n^(r-1) sum a_i^r"},
        {"buz_general", F::vector, abe, pb::alpha, OperandClass::any, false,
         "|<a,e><e,b>| <= (max{1,|alpha-1|} |a||b| + |<a,b>|) / |alpha|"},
        {"buz_half", F::vector, abe, 0, OperandClass::any, false,
         "|<a,e><e,b>| <= (|a||b| + |<a,b>|) / 2"},
        {"mix_al_be", F::vector, abe, pb::alpha | pb::beta, OperandClass::any, false,
         "|<a,e><e,b>|^2 <= chi1 |a|^2|b|^2 + chi2 |a||b||<a,b>|"},
        {"buzano_beta", F::vector, abe, pb::beta, OperandClass::any, false,
         "|<a,e><e,b>|^2 <= ((2b+1)/(b+1) |a|^2|b|^2 + (2b+3)/(b+1) |a||b||<a,b>|) / 4"},
        {"ramadan_kareem", F::vector, abe, pb::alpha | pb::beta, OperandClass::any, false,
         "|<a,e><e,b>|^2 <= delta1 |a|^2|b|^2 + delta2 |<a,b>|^2"},
        {"buz_beta", F::vector, abe, pb::beta, OperandClass::any, false,
         "|<a,e><e,b>|^2 <= ((2b+1)/(b+1) |a|^2|b|^2 + 1/(b+1) |<a,b>|^2) / 2"},
        {"buz_beta_pow", F::vector, abe, pb::beta | pb::r, OperandClass::any, false,
         "|<a,e><e,b>|^2r <= ((2b+1)/(b+1) |a|^2r|b|^2r + 1/(b+1) |<a,b>|^2r) / 2"},
        {"modified_buzano", F::vector, abe, pb::beta | pb::r, OperandClass::any, false,
         "|<a,e><e,b>|^2r <= ((2b+1)/(b+1) |a|^2r|b|^2r + (2b+3)/(b+1) |a|^r|b|^r|<a,b>|^r) / 4"},
        {"drag", F::vector, abe, 0, OperandClass::any, false,
         "|<a,e>|^2 + |<e,b>|^2 <= sqrt(<a,a>^2 + <b,b>^2 + 2|<a,b>|^2)"},
        {"mixed_schwarz", F::mixed_schwarz, {"T", "x", "y"}, pb::lam, OperandClass::a_commuting, false,
         "|<Tx,y>| <= <|T|^2lam x,x>^1/2 <|T^#|^2(1-lam) y,y>^1/2 for TA = AT"},
        {"holder_mccarthy", F::holder_mccarthy, {"T", "x"}, pb::r, OperandClass::a_positive, false,
         "<Tx,x>^r <= <T^r x,x> (r >= 1), reversed for r in [0,1], T A-positive, |x| = 1"},
        {"thm_2_7", F::matrix, xy, pb::lam, OperandClass::any, false,
         "w([[0,X],[Y,0]]) <= (|| |X|^2lam || + || |Y^#|^2(1-lam) ||) / 2"},
        {"thm_2_8", F::matrix, xy, pb::lam, OperandClass::any, false,
         "w([[0,X],[Y,0]]) <= (||X||^2lam + ||Y^#||^2(1-lam)) / 2"},
        {"thm_2_10", F::matrix, xy, pb::r | pb::lam, OperandClass::any, false,
         "w^r <= 2^(r-2) w^1/2(f^2r(|X|) + g^2r(|Y^#|)) w^1/2(f^2r(|Y|) + g^2r(|X^#|)), f = t^lam, g = t^(1-lam)"},
        {"cor_2_11", F::matrix, xy, pb::r | pb::lam, OperandClass::any, false,
         "w^r <= 2^(r-2) w^1/2(|X|^2lam r + |Y^#|^2r(1-lam)) w^1/2(|Y|^2lam r + |X^#|^2r(1-lam))"},
        {"rem_2_12", F::matrix, xy, 0, OperandClass::any, false,
         "w <= w^1/2(|X| + |Y^#|) w^1/2(|Y| + |X^#|) / 2"},
        {"moby_a1", F::matrix, xy, pb::alpha | pb::beta, OperandClass::any, false,
         "w^4 <= delta1/4 max{||X^#X + YY^#||^2, ||XX^# + Y^#Y||^2} + delta2 max{w^2(XY), w^2(YX)}"},
        {"ramadan1", F::matrix, xy, pb::beta | pb::r, OperandClass::any, false,
         "w^4r <= (2b+1)/(16(b+1)) max{l^2, m^2} + (2b+3)/(8(b+1)) max{l, m} max{w^r(XY), w^r(YX)}"},
        {"thm_beta", F::matrix, xy, pb::beta | pb::r, OperandClass::any, false,
         "w^4r <= (2b+1)/(8(b+1)) max{l^2, m^2} + 1/(2(b+1)) max{w^2r(XY), w^2r(YX)}"},
        {"thm_alpha", F::matrix, xy, pb::alpha | pb::r, OperandClass::any, false,
         "w^2r <= 2^(r-2) M^r/|alpha|^r max{l, m} + 2^(r-1)/|alpha|^r max{w^r(XY), w^r(YX)}"},
        {"thm_2_16", F::matrix, xy, pb::beta | pb::r | pb::lam | pb::pq, OperandClass::any, false,
         "w^4r <= g1/16 max{l^2, d^2} + g2/8 max{l, d} max{rho, sigma}, g1 = (2b+1)/(4(b+1)), g2 = (2b+3)/(4(b+1))"},
        {"kz", F::matrix, fxyk, pb::alpha | pb::beta, OperandClass::any, false,
         "w^4([[F,X],[Y,K]]) <= (2+4chi1) max{a,b} + 2 w^2(R) + 4chi2 max{c,d} w(R), R = [[0,XK],[YF,0]]"},
        {"modified_kz", F::matrix, fxyk, pb::alpha | pb::beta | pb::mu, OperandClass::any, false,
         "w^4 <= (2+2chi1+2chi3) max{a,b} + (2chi2+2mu chi4) max{c,d} w(R) + (4+4(1-mu)chi4) w^2(R)"},
        {"moby_a2", F::single, m, pb::alpha | pb::beta, OperandClass::any, true,
         "w^4(M) <= delta1/4 ||M^#M + MM^#||^2 + delta2 w^2(M^2)"},
        {"ramadan1_cor", F::single, m, pb::beta | pb::r, OperandClass::any, true,
         "w^4r(M) <= (2b+1)/(16(b+1)) S^2 + (2b+3)/(8(b+1)) S w^r(M^2), S = ||(M^#M)^r + (MM^#)^r||"},
        {"mohd1", F::single, m, pb::beta | pb::r, OperandClass::any, true,
         "w^4r(M) <= (2b+1)/(8(b+1)) S^2 + 1/(2(b+1)) w^2r(M^2)"},
        {"alpha_cor", F::single, m, pb::alpha | pb::r, OperandClass::any, false,
         "w^2r(M) <= 2^(r-2) M^r/|alpha|^r ||(MM^#)^r + (M^#M)^r|| + 2^(r-1)/|alpha|^r w^r(M^2)"},
        {"college1", F::single, m, pb::alpha | pb::beta, OperandClass::any, false,
         "w^4(M) <= (1+2chi1)/8 a + 1/8 w^2(M^2) + chi2/4 c w(M^2)"},
        {"modified_kz_cor", F::single, m, pb::alpha | pb::beta | pb::mu, OperandClass::any, false,
         "w^4(M) <= (1+chi1+chi3)/8 a + (chi2+mu chi4)/8 c w(M^2) + (1+(1-mu)chi4)/4 w^2(M^2)"},
        {"prod1", F::product, quad, pb::beta | pb::r, OperandClass::any, false,
         "w^4r(S^#T) <= (1+2b)/(16(b+1)) max{phi^2, psi^2} + (3+2b)/(8(b+1)) max{phi, psi} max{rho, theta}"},
        {"prod2", F::product, quad, pb::beta | pb::r, OperandClass::any, false,
         "w^4r(S^#T) <= (1+2b)/(8(b+1)) max{phi^2, psi^2} + 1/(2(b+1)) max{rho^2, theta^2}"},
        {"cor_prod", F::product, fk, pb::beta | pb::r, OperandClass::any, false,
         "w^4r(K^#F) <= (1+2b)/(16(b+1)) phi^2 + (3+2b)/(8(b+1)) phi w^r(K^#K F^#F)"},
        {"cor_prod_a", F::product, fk, pb::beta | pb::r, OperandClass::any, false,
         "w^4r(K^#F) <= (1+2b)/(8(b+1)) phi^2 + 1/(2(b+1)) w^2r(K^#K F^#F)"},
        {"power_2r", F::product, fk, pb::r, OperandClass::any, false,
         "w^2r(K^#F) <= ||(F^#F)^2r + (K^#K)^2r|| / 2"},
    };
    return v;
  }();
  return entries;
}

const RegistryEntry& registry_entry(const std::string& id) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const RegistryEntry& e) { return e.id == id; });
  if (it == reg.end()) throw Error(ErrorCode::UnknownId, "unknown inequality id '" + id + "'");
  return *it;
}

std::vector<std::string> registry_ids() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.push_back(e.id);
  return out;
}

std::vector<std::string> registry_ids(Family family) {
  std::vector<std::string> out;
  for (const auto& e : registry()) {
    if (e.family == family) out.push_back(e.id);
  }
  return out;
}

void validate_params(const RegistryEntry& entry, const BoundParams& p) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::DomainViolation, entry.id + ": " + what);
  };
  const unsigned used = entry.params;
  if ((used & pb::alpha) && !(std::abs(p.alpha) > 0.0 && std::isfinite(std::abs(p.alpha)))) {
    fail("alpha must be a finite nonzero complex number");
  }
  if ((used & pb::beta) && !(p.beta >= 0.0 && std::isfinite(p.beta))) fail("beta must be >= 0");
  if ((used & pb::r) && !(std::isfinite(p.r) && (p.r >= 1.0 || (entry.family == Family::holder_mccarthy && p.r >= 0.0)))) {
    fail("r must be >= 1");
  }
  if ((used & pb::mu) && !(p.mu >= 0.0 && p.mu <= 1.0)) fail("mu must lie in [0, 1]");
  if ((used & pb::lam) && !(p.lam >= 0.0 && p.lam <= 1.0)) fail("lam must lie in [0, 1]");
  if (used & pb::pq) {
    if (!(p.p > 1.0 && p.q > 1.0 && std::isfinite(p.p) && std::isfinite(p.q))) fail("p and q must exceed 1");
    if (std::abs(1.0 / p.p + 1.0 / p.q - 1.0) > 1e-12) fail("p and q must be conjugate");
    if (entry.id == "thm_2_16" && !(p.p * p.r >= 2.0 && p.q * p.r >= 2.0)) fail("requires pr >= 2 and qr >= 2");
  }
}

namespace detail {

const CMatrix& require_operand(const Operands& ops, const std::string& name, Eigen::Index n,
                               const std::string& id) {
  auto it = ops.find(name);
  if (it == ops.end()) throw Error(ErrorCode::DomainViolation, id + ": missing operand '" + name + "'");
  const bool vector_operand = name == "a" || name == "b" || name == "e" || name == "x" || name == "y";
  const Eigen::Index cols = vector_operand ? 1 : n;
  if (it->second.rows() != n || it->second.cols() != cols) {
    throw Error(ErrorCode::DimensionMismatch, id + ": operand '" + name + "' has the wrong shape");
  }
  return it->second;
}

}  // namespace detail

BoundReport evaluate(const SemiInnerContext& ctx, const std::string& id, const Instance& inst) {
  const RegistryEntry& entry = registry_entry(id);
  const Eigen::Index n = ctx.dim();
  auto op = [&](const std::string& name) -> const CMatrix& {
    return detail::require_operand(inst.operands, name, n, id);
  };
  switch (entry.family) {
    case Family::scalar: {
      auto links = check_scalar_lemma(id, inst.scalars, inst.params);
      return *std::min_element(links.begin(), links.end(), [](const BoundReport& l, const BoundReport& r) {
        return l.rel_slack < r.rel_slack;
      });
    }
    case Family::vector:
      return check_vector_lemma(ctx, id, op("a"), op("b"), op("e"), inst.params);
    case Family::mixed_schwarz:
      return check_mixed_schwarz(ctx, op("T"), op("x"), op("y"), inst.params.lam);
    case Family::holder_mccarthy: {
      BoundReport rep = check_holder_mccarthy(ctx, op("T"), op("x"), inst.params.r);
      rep.params = inst.params;
      return rep;
    }
    case Family::matrix:
      return check_matrix_bound(ctx, id, inst.operands, inst.params);
    case Family::single:
      return check_single_operator_bound(ctx, id, op("M"), inst.params);
    case Family::product:
      return check_product_bound(ctx, id, inst.operands, inst.params);
  }
  throw Error(ErrorCode::UnknownId, id);
}

}  // namespace semihilb
