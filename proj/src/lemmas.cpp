#include <cmath>
#include <numeric>

#include "calc.hpp"

namespace semihilb {

namespace {

constexpr double kUnitTol = 1e-10;

void require_positive_inputs(const std::string& id, const std::vector<double>& inputs, std::size_t min_count) {
  if (inputs.size() < min_count) throw Error(ErrorCode::DomainViolation, id + ": too few inputs");
  for (double v : inputs) {
    if (!(v > 0.0) || !std::isfinite(v)) throw Error(ErrorCode::DomainViolation, id + ": inputs must be positive");
  }
}

void require_unit(const SemiInnerContext& ctx, const CVector& e, const char* what) {
  const double norm = vec_seminorm(ctx, e);
  if (std::abs(norm - 1.0) > kUnitTol) {
    throw Error(ErrorCode::NotUnitVector, std::string(what) + " must have unit A-seminorm, got " + std::to_string(norm));
  }
}

}  // namespace

std::vector<BoundReport> check_scalar_lemma(const std::string& id, const std::vector<double>& inputs,
                                            const BoundParams& params) {
  const RegistryEntry& entry = registry_entry(id);
  if (entry.family != Family::scalar) throw Error(ErrorCode::UnknownId, id + " is not a scalar lemma");
  validate_params(entry, params);
  if (id == "jensen") {
    require_positive_inputs(id, inputs, 2);
    if (inputs.size() != 2) throw Error(ErrorCode::DomainViolation, "jensen takes exactly two inputs");
    const double a = inputs[0];
    const double b = inputs[1];
    const double l = params.lam;
    const double geo = std::pow(a, l) * std::pow(b, 1.0 - l);
    const double arith = l * a + (1.0 - l) * b;
    const double power = std::pow(l * std::pow(a, params.r) + (1.0 - l) * std::pow(b, params.r), 1.0 / params.r);
    BoundReport first = make_report("jensen", geo, arith, params);
    first.intermediates["link"] = 1.0;
    BoundReport second = make_report("jensen", arith, power, params);
    second.intermediates["link"] = 2.0;
    return {first, second};
  }
  require_positive_inputs(id, inputs, 1);
  const double n = static_cast<double>(inputs.size());
  const double sum = std::accumulate(inputs.begin(), inputs.end(), 0.0);
  double power_sum = 0.0;
  for (double v : inputs) power_sum += std::pow(v, params.r);
  BoundReport rep = make_report("bohr", std::pow(sum, params.r), std::pow(n, params.r - 1.0) * power_sum, params);
  rep.intermediates["n"] = n;
  return {rep};
}

BoundReport check_vector_lemma(const SemiInnerContext& ctx, const std::string& id, const CVector& a,
                               const CVector& b, const CVector& e, const BoundParams& params) {
  const RegistryEntry& entry = registry_entry(id);
  if (entry.family != Family::vector) throw Error(ErrorCode::UnknownId, id + " is not a vector lemma");
  validate_params(entry, params);
  const Eigen::Index n = ctx.dim();
  if (a.size() != n || b.size() != n || e.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, id + ": vector length differs from the weight dimension");
  }
  require_unit(ctx, e, "e");

  const double na = vec_seminorm(ctx, a);
  const double nb = vec_seminorm(ctx, b);
  const double ab = std::abs(semi_inner(ctx, a, b));
  const cplx ae = semi_inner(ctx, a, e);
  const cplx eb = semi_inner(ctx, e, b);
  const double prod = std::abs(ae * eb);
  const double beta = params.beta;
  const double r = params.r;
  const auto k = detail::buzano_constants(params.alpha, beta);

  double lhs = 0.0;
  double rhs = 0.0;
  std::map<std::string, double> extra;
  if (id == "buz_general") {
    lhs = prod;
    rhs = (k.m * na * nb + ab) / std::abs(params.alpha);
  } else if (id == "buz_half") {
    lhs = prod;
    rhs = 0.5 * (na * nb + ab);
  } else if (id == "mix_al_be") {
    lhs = prod * prod;
    rhs = k.chi1 * na * na * nb * nb + k.chi2 * na * nb * ab;
    extra = {{"chi1", k.chi1}, {"chi2", k.chi2}};
  } else if (id == "buzano_beta") {
    lhs = prod * prod;
    rhs = 0.25 * ((2.0 * beta + 1.0) / (beta + 1.0) * na * na * nb * nb +
                  (2.0 * beta + 3.0) / (beta + 1.0) * na * nb * ab);
  } else if (id == "ramadan_kareem") {
    lhs = prod * prod;
    rhs = k.delta1 * na * na * nb * nb + k.delta2 * ab * ab;
    extra = {{"delta1", k.delta1}, {"delta2", k.delta2}};
  } else if (id == "buz_beta") {
    lhs = prod * prod;
    rhs = 0.5 * ((2.0 * beta + 1.0) / (beta + 1.0) * na * na * nb * nb + ab * ab / (beta + 1.0));
  } else if (id == "buz_beta_pow") {
    lhs = std::pow(prod, 2.0 * r);
    rhs = 0.5 * ((2.0 * beta + 1.0) / (beta + 1.0) * std::pow(na * nb, 2.0 * r) +
                 std::pow(ab, 2.0 * r) / (beta + 1.0));
  } else if (id == "modified_buzano") {
    lhs = std::pow(prod, 2.0 * r);
    rhs = 0.25 * ((2.0 * beta + 1.0) / (beta + 1.0) * std::pow(na * nb, 2.0 * r) +
                  (2.0 * beta + 3.0) / (beta + 1.0) * std::pow(na * nb * ab, r));
  } else {
    lhs = std::norm(ae) + std::norm(eb);
    rhs = std::sqrt(std::pow(na, 4) + std::pow(nb, 4) + 2.0 * ab * ab);
  }
  BoundReport rep = make_report(id, lhs, rhs, params);
  rep.intermediates = std::move(extra);
  rep.intermediates["norm_a"] = na;
  rep.intermediates["norm_b"] = nb;
  rep.intermediates["inner_ab"] = ab;
  return rep;
}

BoundReport check_mixed_schwarz(const SemiInnerContext& ctx, const CMatrix& t, const CVector& x,
                                const CVector& y, double lam) {
  const Eigen::Index n = ctx.dim();
  if (t.rows() != n || t.cols() != n || x.size() != n || y.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "mixed_schwarz: operand shapes differ from the weight");
  }
  if (!(lam >= 0.0 && lam <= 1.0)) throw Error(ErrorCode::DomainViolation, "mixed_schwarz: lam must lie in [0, 1]");
  BoundParams params;
  params.lam = lam;
  const double comm = (t * ctx.a - ctx.a * t).norm();
  const bool commutes = comm <= 1e-8 * (1.0 + spectral_norm(ctx.a) * spectral_norm(t));

  const detail::ACalc calc(ctx);
  const CMatrix left = calc.abs_pow(t, 2.0 * lam);
  const CMatrix right = calc.abs_pow(calc.adj(t), 2.0 * (1.0 - lam));
  const double lx = std::max(0.0, semi_inner(ctx, CVector(left * x), x).real());
  const double ry = std::max(0.0, semi_inner(ctx, CVector(right * y), y).real());
  const double lhs = std::abs(semi_inner(ctx, CVector(t * x), y));
  BoundReport rep = make_report("mixed_schwarz", lhs, std::sqrt(lx) * std::sqrt(ry), params);
  rep.hypotheses_ok = commutes;
  rep.intermediates["commutator"] = comm;
  rep.intermediates["left_form"] = lx;
  rep.intermediates["right_form"] = ry;
  return rep;
}

BoundReport check_holder_mccarthy(const SemiInnerContext& ctx, const CMatrix& t, const CVector& x,
                                  double r) {
  const Eigen::Index n = ctx.dim();
  if (t.rows() != n || t.cols() != n || x.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "holder_mccarthy: operand shapes differ from the weight");
  }
  if (!(r >= 0.0) || !std::isfinite(r)) throw Error(ErrorCode::DomainViolation, "holder_mccarthy: r must be >= 0");
  if (!is_a_positive(ctx, t)) throw Error(ErrorCode::NotAPositive, "holder_mccarthy: T is not A-positive");
  require_unit(ctx, x, "x");
  BoundParams params;
  params.r = r;
  const double form = std::max(0.0, semi_inner(ctx, CVector(t * x), x).real());
  const CMatrix tr = a_positive_power(ctx, t, r);
  const double form_r = std::max(0.0, semi_inner(ctx, CVector(tr * x), x).real());
  const double powered = detail::power0(form, r);
  BoundReport rep = r >= 1.0 ? make_report("holder_mccarthy", powered, form_r, params)
                             : make_report("holder_mccarthy", form_r, powered, params);
  rep.intermediates["form"] = form;
  rep.intermediates["form_r"] = form_r;
  return rep;
}

CMatrix a_abs_function(const SemiInnerContext& ctx, const CMatrix& t, const std::function<double(double)>& h) {
  const CMatrix r = reduce(ctx, t).tilde;
  const CMatrix gram = r.adjoint() * r;
  const auto spec = hermitian_eig(gram);
  const Eigen::Index n = spec.eigenvalues.size();
  if (n == 0) return CMatrix(0, 0);
  const double top = spec.eigenvalues.cwiseAbs().maxCoeff();
  CVector mapped = CVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = spec.eigenvalues(i);
    if (v > kDefaultRankTol * top && v > 0.0) mapped(i) = h(std::sqrt(v));
  }
  const CMatrix fr = spec.eigenvectors * mapped.asDiagonal() * spec.eigenvectors.adjoint();
  return pullback(ctx, fr);
}

}  // namespace semihilb
