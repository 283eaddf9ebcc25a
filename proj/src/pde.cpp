#include "semihilb/pde.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "calc.hpp"

namespace semihilb {

double eval_coeff(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

double eval_coeff_derivative(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;) v = v * x + static_cast<double>(k) * coeffs[k];
  return v;
}

void validate_spec(const EllipticSpec& spec) {
  if (spec.n_points < 2) throw Error(ErrorCode::InvalidSpec, "n_points must be >= 2");
  if (spec.coeff_a.empty()) throw Error(ErrorCode::InvalidSpec, "coeff_a is empty");
  if (!(spec.coeff_c >= 0.0) || !std::isfinite(spec.coeff_c)) throw Error(ErrorCode::InvalidSpec, "c must be >= 0");
  const double h = 1.0 / (spec.n_points + 1);
  for (int j = 0; j <= spec.n_points; ++j) {
    const double a = eval_coeff(spec.coeff_a, (j + 0.5) * h);
    if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorCode::InvalidSpec, "a(x) must be positive on [0, 1]");
  }
  for (int j = 1; j <= spec.n_points; ++j) {
    if (!(eval_coeff(spec.coeff_a, j * h) > 0.0)) throw Error(ErrorCode::InvalidSpec, "a(x) must be positive on [0, 1]");
  }
}

FdSystem assemble_fd(const EllipticSpec& spec) {
  validate_spec(spec);
  const int n = spec.n_points;
  FdSystem sys;
  sys.h = 1.0 / (n + 1);
  const double h2 = sys.h * sys.h;
  sys.t = CMatrix::Zero(n, n);
  sys.a = CMatrix::Zero(n, n);
  sys.x.resize(n);
  // One evaluation per cell face keeps the two off-diagonal copies bit-identical.
  std::vector<double> face(n + 1);
  for (int k = 0; k <= n; ++k) face[k] = eval_coeff(spec.coeff_a, (k + 0.5) * sys.h);
  for (int j = 0; j < n; ++j) {
    const double xj = (j + 1) * sys.h;
    const double west = face[j];
    const double east = face[j + 1];
    sys.x(j) = xj;
    sys.a(j, j) = eval_coeff(spec.coeff_a, xj);
    sys.t(j, j) = (west + east) / h2 + spec.coeff_c;
    if (j > 0) sys.t(j, j - 1) = -west / h2;
    if (j + 1 < n) sys.t(j, j + 1) = -east / h2;
  }
  return sys;
}

namespace {

CMatrix checked_inverse(const CMatrix& t, ErrorCode code, const char* what) {
  Eigen::JacobiSVD<CMatrix> svd(t);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || !(s(s.size() - 1) > 1e-13 * s(0))) throw Error(code, what);
  return t.partialPivLu().inverse();
}

}  // namespace

BoundReport stability_report(const EllipticSpec& spec, double tol, int samples, std::uint64_t seed) {
  const FdSystem sys = assemble_fd(spec);
  const SemiInnerContext ctx = make_context(sys.a);
  const detail::ACalc c(ctx);
  const CMatrix tinv = checked_inverse(sys.t, ErrorCode::SingularOperator, "T_h is singular");
  const CMatrix tadj_inv = checked_inverse(c.adj(sys.t), ErrorCode::SingularOperator, "T_h^# is singular");

  const double norm = c.norm(tinv);
  const double norm_adj = c.norm(tadj_inv);
  const double radius = a_numerical_radius(ctx, tinv, tol * std::max(1.0, norm));
  const SemiInnerContext ctx2 = dsum_context(ctx, 2);
  const double block = a_numerical_radius(ctx2, assemble(BlockSpec::antidiag(tinv, tadj_inv)), tol * std::max(1.0, norm));
  const RefinedAlphaResult refined = detail::refined_alpha_min(norm, norm_adj);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  double gain = 0.0;
  int display_violations = 0;
  for (int s = 0; s < samples; ++s) {
    CVector f(ctx.dim());
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      const double re = nd(rng);
      const double im = nd(rng);
      f(i) = cplx(re, im);
    }
    const double nf = vec_seminorm(ctx, f);
    const double nu = vec_seminorm(ctx, CVector(tinv * f));
    gain = std::max(gain, nu / nf);
    if (nu > radius * nf * (1.0 + 1e-12)) ++display_violations;
  }

  BoundParams params;
  BoundReport rep = make_report("pde_stability", gain, norm, params);
  rep.intermediates = {{"radius", radius},
                       {"norm_inverse", norm},
                       {"norm_adjoint_inverse", norm_adj},
                       {"block_radius", block},
                       {"block_bound", 0.5 * (norm + norm_adj)},
                       {"refined_bound", refined.bound},
                       {"refined_lam", refined.lam_star},
                       {"radius_display_violations", static_cast<double>(display_violations)},
                       {"samples", static_cast<double>(samples)},
                       {"h", sys.h}};
  return rep;
}

PreconditionerReport preconditioner_report(const EllipticSpec& spec, PreconditionerKind kind, int iterations,
                                           std::uint64_t seed) {
  if (iterations < 1) throw Error(ErrorCode::InvalidSpec, "iterations must be >= 1");
  const FdSystem sys = assemble_fd(spec);
  const SemiInnerContext ctx = make_context(sys.a);
  const Eigen::Index n = sys.t.rows();
  CMatrix p;
  switch (kind) {
    case PreconditionerKind::jacobi: p = CMatrix(sys.t.diagonal().asDiagonal()); break;
    case PreconditionerKind::identity: p = CMatrix::Identity(n, n); break;
    case PreconditionerKind::exact: p = sys.t; break;
  }
  const CMatrix pinv_t = checked_inverse(p, ErrorCode::SingularPreconditioner, "preconditioner is singular") * sys.t;
  const CMatrix m = CMatrix::Identity(n, n) - pinv_t;

  PreconditionerReport rep;
  rep.kind = kind;
  rep.rho = a_numerical_radius(ctx, m);
  rep.norm = op_seminorm(ctx, m);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  CVector e(n);
  for (Eigen::Index i = 0; i < n; ++i) e(i) = nd(rng);
  const double e0 = vec_seminorm(ctx, e);
  double prev = 1.0;
  for (int k = 1; k <= iterations; ++k) {
    e = m * e;
    const double ratio = vec_seminorm(ctx, e) / e0;
    rep.error_ratios.push_back(ratio);
    if (ratio > prev * (1.0 + 1e-12) + 1e-300) rep.monotone = false;
    if (ratio > std::pow(rep.rho, k) * (1.0 + 1e-10) + 1e-14) rep.bound_respected = false;
    prev = ratio;
  }
  rep.flagged = rep.rho >= 1.0 || !rep.bound_respected;
  return rep;
}

double truncation_error(const EllipticSpec& spec) {
  const FdSystem sys = assemble_fd(spec);
  const double pi = std::numbers::pi;
  CVector u(sys.x.size());
  CVector f(sys.x.size());
  for (Eigen::Index j = 0; j < sys.x.size(); ++j) {
    const double x = sys.x(j);
    const double a = eval_coeff(spec.coeff_a, x);
    const double da = eval_coeff_derivative(spec.coeff_a, x);
    u(j) = std::sin(pi * x);
    f(j) = -da * pi * std::cos(pi * x) + a * pi * pi * std::sin(pi * x) + spec.coeff_c * std::sin(pi * x);
  }
  return (sys.t * u - f).cwiseAbs().maxCoeff();
}

std::vector<ConvergenceRow> convergence_study(const EllipticSpec& spec, const std::vector<int>& n_values) {
  std::vector<ConvergenceRow> rows;
  for (int n : n_values) {
    EllipticSpec s = spec;
    s.n_points = n;
    const FdSystem sys = assemble_fd(s);
    const SemiInnerContext ctx = make_context(sys.a);
    const detail::ACalc c(ctx);
    const CMatrix tinv = checked_inverse(sys.t, ErrorCode::SingularOperator, "T_h is singular");
    const CMatrix tadj_inv = checked_inverse(c.adj(sys.t), ErrorCode::SingularOperator, "T_h^# is singular");
    ConvergenceRow row;
    row.n = n;
    row.h = sys.h;
    row.norm = c.norm(tinv);
    row.radius = a_numerical_radius(ctx, tinv, 1e-8 * std::max(1.0, row.norm));
    row.bound = detail::refined_alpha_min(row.norm, c.norm(tadj_inv)).bound;
    row.error = truncation_error(s);
    if (!rows.empty() && row.error > 0.0 && rows.back().error > 0.0) {
      row.observed_order = std::log(rows.back().error / row.error) / std::log(rows.back().h / row.h);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "N,h,norm,radius,bound,observed_order\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.h << ',' << r.norm << ',' << r.radius << ',' << r.bound << ',' << r.observed_order << '\n';
  }
  return out.str();
}

}  // namespace semihilb
