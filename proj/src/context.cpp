#include "semihilb/context.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace semihilb {

namespace {

void require_dim(const SemiInnerContext& ctx, const CMatrix& t, const char* where) {
  if (t.rows() != ctx.dim() || t.cols() != ctx.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(where) + ": operator is " + std::to_string(t.rows()) + "x" +
                    std::to_string(t.cols()) + ", context dimension " + std::to_string(ctx.dim()));
  }
}

void require_vec(const SemiInnerContext& ctx, const CVector& x, const char* where) {
  if (x.size() != ctx.dim()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(where) + ": vector length mismatch");
  }
}

}  // namespace

SemiInnerContext make_context(const CMatrix& a, double rank_tol) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NonSquare, "make_context: weight is not square");
  if (!(rank_tol > 0.0)) throw Error(ErrorCode::DomainViolation, "make_context: rank_tol must be > 0");
  if (!is_hermitian(a)) throw Error(ErrorCode::NotHermitian, "make_context: weight is not Hermitian");
  const auto spec = hermitian_eig(a);
  const Eigen::Index n = a.rows();
  const double top = n ? spec.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  if (n && spec.eigenvalues.minCoeff() < -1e-9 * top) {
    throw Error(ErrorCode::NotPositive, "make_context: weight has a negative eigenvalue");
  }

  SemiInnerContext ctx;
  ctx.rank_tol = rank_tol;
  Eigen::VectorXd kept = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd half = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd inv_half = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd support = Eigen::VectorXd::Zero(n);
  bool truncated = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = spec.eigenvalues(i);
    if (lam > rank_tol * top && lam > 0.0) {
      kept(i) = lam;
      half(i) = std::sqrt(lam);
      inv(i) = 1.0 / lam;
      inv_half(i) = 1.0 / half(i);
      support(i) = 1.0;
      ++ctx.rank;
    } else if (lam != 0.0) {
      truncated = true;
    }
  }
  const CMatrix& v = spec.eigenvectors;
  auto build = [&](const Eigen::VectorXd& d) -> CMatrix { return v * d.asDiagonal() * v.adjoint(); };
  ctx.a = truncated ? build(kept) : CMatrix((a + a.adjoint()) / 2.0);
  ctx.a_pinv = build(inv);
  ctx.a_half = build(half);
  ctx.a_half_pinv = build(inv_half);
  ctx.range_proj = build(support);
  return ctx;
}

cplx semi_inner(const SemiInnerContext& ctx, const CVector& x, const CVector& y) {
  require_vec(ctx, x, "semi_inner");
  require_vec(ctx, y, "semi_inner");
  return y.dot(ctx.a * x);
}

double vec_seminorm(const SemiInnerContext& ctx, const CVector& x) {
  const cplx v = semi_inner(ctx, x, x);
  if (std::abs(v.imag()) > 1e-10 * (1.0 + std::abs(v.real()))) {
    throw Error(ErrorCode::NotHermitian, "vec_seminorm: <x, x>_A has a non-negligible imaginary part");
  }
  return std::sqrt(std::max(v.real(), 0.0));
}

CMatrix a_adjoint(const SemiInnerContext& ctx, const CMatrix& t) {
  require_dim(ctx, t, "a_adjoint");
  return ctx.a_pinv * t.adjoint() * ctx.a;
}

ReducedOperator reduce(const SemiInnerContext& ctx, const CMatrix& t) {
  require_dim(ctx, t, "reduce");
  return {ctx.range_proj * ctx.a_half * t * ctx.a_half_pinv * ctx.range_proj};
}

CMatrix pullback(const SemiInnerContext& ctx, const CMatrix& s) {
  require_dim(ctx, s, "pullback");
  return ctx.a_half_pinv * s * ctx.a_half;
}

double op_seminorm(const SemiInnerContext& ctx, const CMatrix& t) {
  return spectral_norm(reduce(ctx, t).tilde);
}

double a_numerical_radius(const SemiInnerContext& ctx, const CMatrix& t, double tol) {
  return classical_numerical_radius(reduce(ctx, t).tilde, tol);
}

namespace {

// Uniform direction in ran(A), mapped to a vector with ||x||_A = 1.
CVector random_unit_a_vector(const SemiInnerContext& ctx, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  const Eigen::Index n = ctx.dim();
  for (;;) {
    CVector g(n);
    for (Eigen::Index i = 0; i < n; ++i) g(i) = cplx(gauss(rng), gauss(rng));
    CVector y = ctx.range_proj * g;
    const double ny = y.norm();
    if (ny > 1e-12 * g.norm()) return ctx.a_half_pinv * (y / ny);
  }
}

void require_sampling(const SemiInnerContext& ctx, const CMatrix& t, int samples, const char* where) {
  require_dim(ctx, t, where);
  if (ctx.rank == 0) throw Error(ErrorCode::DegenerateContext, std::string(where) + ": A = 0");
  if (samples < 1) throw Error(ErrorCode::DomainViolation, std::string(where) + ": samples < 1");
}

}  // namespace

double a_numerical_radius_lower(const SemiInnerContext& ctx, const CMatrix& t, int samples,
                                std::uint64_t seed) {
  require_sampling(ctx, t, samples, "a_numerical_radius_lower");
  std::mt19937_64 rng(seed);
  const CMatrix at = ctx.a * t;
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    const CVector x = random_unit_a_vector(ctx, rng);
    best = std::max(best, std::abs(x.dot(at * x)));
  }
  return best;
}

double a_numerical_radius_ascent(const SemiInnerContext& ctx, const CMatrix& t, int samples,
                                 std::uint64_t seed, int iterations) {
  require_sampling(ctx, t, samples, "a_numerical_radius_ascent");
  std::mt19937_64 rng(seed);
  const CMatrix at = ctx.a * t;
  auto value = [&](const CVector& x) { return std::abs(x.dot(at * x)); };
  auto normalize = [&](const CVector& x) -> CVector {
    const double nx = vec_seminorm(ctx, x);
    return nx > 0.0 ? CVector(x / nx) : x;
  };
  std::vector<std::pair<double, CVector>> starts;
  for (int s = 0; s < samples; ++s) {
    CVector x = random_unit_a_vector(ctx, rng);
    starts.emplace_back(value(x), x);
  }
  std::sort(starts.begin(), starts.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
  starts.resize(std::min<std::size_t>(starts.size(), 8));

  double best = 0.0;
  for (auto& [v, x] : starts) {
    double step = 0.5;
    for (int it = 0; it < iterations && step > 1e-14; ++it) {
      const cplx s = x.dot(at * x);
      // Wirtinger gradient of |<Tx, x>_A|^2 in the conjugate variable.
      CVector grad = std::conj(s) * (at * x) + s * (at.adjoint() * x);
      grad = ctx.a_pinv * grad;  // Riesz representative for the A-geometry
      const double gn = vec_seminorm(ctx, grad);
      if (gn == 0.0) break;
      const CVector trial = normalize(x + (step / gn) * grad);
      const double tv = value(trial);
      if (tv > v) {
        x = trial;
        v = tv;
        step *= 1.5;
      } else {
        step *= 0.5;
      }
    }
    best = std::max(best, v);
  }
  return best;
}

CMatrix a_abs_power(const SemiInnerContext& ctx, const CMatrix& t, double p) {
  const CMatrix r = reduce(ctx, t).tilde;
  return pullback(ctx, psd_power(CMatrix(r.adjoint() * r), p / 2.0));
}

CMatrix a_positive_power(const SemiInnerContext& ctx, const CMatrix& s, double p) {
  if (!is_a_positive(ctx, s)) throw Error(ErrorCode::NotAPositive, "a_positive_power: operator is not A-positive");
  const CMatrix r = reduce(ctx, s).tilde;
  return pullback(ctx, psd_power(CMatrix((r + r.adjoint()) / 2.0), p));
}

bool is_a_selfadjoint(const SemiInnerContext& ctx, const CMatrix& t, double tol) {
  require_dim(ctx, t, "is_a_selfadjoint");
  return is_hermitian(CMatrix(ctx.a * t), tol);
}

bool is_a_positive(const SemiInnerContext& ctx, const CMatrix& t, double tol) {
  if (!is_a_selfadjoint(ctx, t, tol)) return false;
  const CMatrix at = ctx.a * t;
  const CMatrix sym = (at + at.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
  if (sym.size() == 0) return true;
  return es.eigenvalues().minCoeff() >= -tol * (1.0 + spectral_norm(sym));
}

bool preserves_kernel(const SemiInnerContext& ctx, const CMatrix& t, double tol) {
  require_dim(ctx, t, "preserves_kernel");
  const CMatrix id = CMatrix::Identity(ctx.dim(), ctx.dim());
  const CMatrix leak = ctx.range_proj * t * (id - ctx.range_proj);
  return leak.norm() <= tol * (1.0 + t.norm());
}

}  // namespace semihilb
