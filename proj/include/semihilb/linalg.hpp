#pragma once

// Dense Hermitian kernels: eigendecomposition, pseudoinverse, PSD powers,
// spectral norm and the classical numerical radius. Everything is templated
// on the real scalar type and accepts any Eigen expression.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "semihilb/error.hpp"
#include "semihilb/golden.hpp"

namespace semihilb {

template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using CMatrix = ComplexMatrix<double>;
using CVector = ComplexVector<double>;
using cplx = std::complex<double>;

inline constexpr double kHermitianTol = 1e-8;
inline constexpr double kDefaultRankTol = 1e-10;

template <typename Real>
struct Spectrum {
  RealVector<Real> eigenvalues;      ///< ascending
  ComplexMatrix<Real> eigenvectors;  ///< orthonormal columns
};

namespace detail {

template <typename Derived>
auto to_complex(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return ComplexMatrix<Real>(m.template cast<std::complex<Real>>());
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* where) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NonSquare, std::string(where) + ": matrix is " +
                                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace detail

/// Frobenius-relative Hermitian test: ||M - M*||_F <= tol (1 + ||M||_F).
template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = kHermitianTol) {
  if (m.rows() != m.cols()) return false;
  auto a = detail::to_complex(m);
  return (a - a.adjoint()).norm() <= tol * (1.0 + a.norm());
}

/// Eigendecomposition of a Hermitian matrix; eigenvalues ascending.
template <typename Derived>
auto hermitian_eig(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  detail::require_square(m, "hermitian_eig");
  ComplexMatrix<Real> a = detail::to_complex(m);
  if ((a - a.adjoint()).norm() > Real(kHermitianTol) * (1 + a.norm())) {
    throw Error(ErrorCode::NotHermitian, "hermitian_eig: input is not Hermitian");
  }
  ComplexMatrix<Real> sym = (a + a.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> es(sym);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "hermitian_eig: eigensolver did not converge");
  }
  return Spectrum<Real>{es.eigenvalues(), es.eigenvectors()};
}

/// Largest singular value; zero for an empty matrix.
template <typename Derived>
auto spectral_norm(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (m.size() == 0) return Real(0);
  Eigen::JacobiSVD<ComplexMatrix<Real>> svd(detail::to_complex(m));
  return svd.singularValues()(0);
}

/// Moore-Penrose pseudoinverse; singular values at or below
/// rank_tol * sigma_max are treated as zero.
template <typename Derived>
auto pinv(const Eigen::MatrixBase<Derived>& m, double rank_tol = kDefaultRankTol) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  ComplexMatrix<Real> a = detail::to_complex(m);
  ComplexMatrix<Real> out = ComplexMatrix<Real>::Zero(a.cols(), a.rows());
  if (a.size() == 0) return out;
  Eigen::JacobiSVD<ComplexMatrix<Real>> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const Real cut = Real(rank_tol) * s(0);
  RealVector<Real> inv = RealVector<Real>::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut && s(i) > Real(0)) inv(i) = Real(1) / s(i);
  }
  out = svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
  return out;
}

/// Functional calculus power of a Hermitian PSD matrix. Eigenvalues at or
/// below kernel_tol * lambda_max count as kernel and map to zero, so p = 0
/// yields the support projector.
template <typename Derived>
auto psd_power(const Eigen::MatrixBase<Derived>& m, double p, double kernel_tol = kDefaultRankTol) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::DomainViolation, "psd_power: exponent must be finite and >= 0");
  }
  auto spec = hermitian_eig(m);
  const Eigen::Index n = spec.eigenvalues.size();
  if (n == 0) return ComplexMatrix<Real>(0, 0);
  const Real top = spec.eigenvalues.cwiseAbs().maxCoeff();
  if (spec.eigenvalues.minCoeff() < -Real(1e-9) * top) {
    throw Error(ErrorCode::NotPSD, "psd_power: matrix has a negative eigenvalue");
  }
  RealVector<Real> lp = RealVector<Real>::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Real lam = spec.eigenvalues(i);
    if (lam > Real(kernel_tol) * top && lam > Real(0)) lp(i) = std::pow(lam, Real(p));
  }
  ComplexMatrix<Real> out = spec.eigenvectors * lp.asDiagonal() * spec.eigenvectors.adjoint();
  return out;
}

template <typename Derived>
auto psd_sqrt(const Eigen::MatrixBase<Derived>& m, double kernel_tol = kDefaultRankTol) {
  return psd_power(m, 0.5, kernel_tol);
}

/// Tuning knobs for the classical numerical radius.
struct RadiusOptions {
  int min_grid = 16;
  int max_grid = 32;
  int max_level_set_iterations = 60;
};

namespace detail {

template <typename Real>
struct HermitianPartExtremes {
  Real top;
  Real bottom;
};

template <typename Real>
HermitianPartExtremes<Real> rotated_hermitian_part(const ComplexMatrix<Real>& m, Real theta) {
  const std::complex<Real> z = std::polar(Real(1), theta);
  ComplexMatrix<Real> h = (z * m + std::conj(z) * m.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> es(h, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev(ev.size() - 1), ev(0)};
}

// Angles theta at which `level` is an eigenvalue of Re(e^{i theta} M). Uses the
// Cayley parametrization e^{i theta} = e^{i center} (1 + i s) / (1 - i s), which
// turns the condition into a quadratic eigenvalue problem in s whose leading
// coefficient is -(2 Re(e^{i center} M) + 2 level), definite by choice of center.
template <typename Real>
std::vector<Real> level_crossings(const ComplexMatrix<Real>& m, Real level, Real center) {
  using C = std::complex<Real>;
  const Eigen::Index n = m.rows();
  const ComplexMatrix<Real> mr = std::polar(Real(1), center) * m;
  const ComplexMatrix<Real> herm2 = mr + mr.adjoint();
  const ComplexMatrix<Real> id = ComplexMatrix<Real>::Identity(n, n);
  const ComplexMatrix<Real> c2 = -(herm2 + Real(2) * level * id);
  const ComplexMatrix<Real> c1 = C(0, 2) * (mr - mr.adjoint());
  const ComplexMatrix<Real> c0 = herm2 - Real(2) * level * id;

  Eigen::PartialPivLU<ComplexMatrix<Real>> lu(c2);
  ComplexMatrix<Real> lin = ComplexMatrix<Real>::Zero(2 * n, 2 * n);
  lin.topRightCorner(n, n) = id;
  lin.bottomLeftCorner(n, n) = -lu.solve(c0);
  lin.bottomRightCorner(n, n) = -lu.solve(c1);
  Eigen::ComplexEigenSolver<ComplexMatrix<Real>> es(lin, false);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "numerical radius: level-set eigensolver failed");
  }
  std::vector<Real> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const C s = es.eigenvalues()(i);
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) continue;
    if (std::abs(s.imag()) <= Real(1e-6) * (Real(1) + std::norm(s))) {
      out.push_back(center + Real(2) * std::atan(s.real()));
    }
  }
  return out;
}

}  // namespace detail

/// Classical numerical radius w(M) = max over theta of lambda_max(Re(e^{i theta} M)).
/// A coarse angular grid seeds golden-section refinement; a level-set test
/// then certifies that no angle exceeds the current value by more than tol/2,
/// raising the value whenever a higher arc is found. The returned value is
/// always attained at some angle, hence never an overestimate.
template <typename Derived>
auto classical_numerical_radius(const Eigen::MatrixBase<Derived>& m_in, double tol = 1e-8,
                                const RadiusOptions& opts = {}) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  detail::require_square(m_in, "classical_numerical_radius");
  if (!(tol > 0.0)) throw Error(ErrorCode::DomainViolation, "numerical radius: tol must be > 0");
  const ComplexMatrix<Real> m = detail::to_complex(m_in);
  const Real norm = spectral_norm(m);
  if (m.size() == 0 || norm == Real(0)) return Real(0);
  if (m.rows() == 1) return std::abs(m(0, 0));

  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  const double wanted = std::ceil(double(two_pi) * double(norm) / tol);
  int k = int(std::clamp(wanted, double(opts.min_grid), double(opts.max_grid)));
  if (k % 2) ++k;
  const Real h = two_pi / Real(k);

  auto f = [&](Real theta) { return detail::rotated_hermitian_part(m, theta).top; };

  std::vector<Real> top(k);
  Real best_bottom = -std::numeric_limits<Real>::infinity();
  Real center = 0;
  for (int i = 0; i < k; ++i) {
    const auto e = detail::rotated_hermitian_part(m, Real(i) * h);
    top[i] = e.top;
    if (e.bottom > best_bottom) {
      best_bottom = e.bottom;
      center = Real(i) * h;
    }
  }
  const Real grid_best = *std::max_element(top.begin(), top.end());

  // Refine the best grid point; the level-set loop below recovers any
  // higher peak elsewhere on the circle.
  const int kb = int(std::max_element(top.begin(), top.end()) - top.begin());
  Real gamma = grid_best;
  {
    const Real lo = Real(kb - 1) * h;
    const auto r = golden_section_maximize([&](double t) { return double(f(Real(t))); },
                                           double(lo), double(lo + 2 * h), 1e-7);
    gamma = std::max(gamma, Real(r.value));
  }

  const Real delta = std::max(Real(tol) / Real(2), Real(64) * std::numeric_limits<Real>::epsilon() * norm);
  for (int it = 0; it < opts.max_level_set_iterations; ++it) {
    std::vector<Real> cross = detail::level_crossings(m, gamma + delta, center);
    if (cross.size() < 2) return gamma;
    for (auto& t : cross) t = center + std::remainder(t - center, two_pi);
    std::sort(cross.begin(), cross.end());
    Real best_mid_value = gamma;
    Real best_lo = 0;
    Real best_hi = 0;
    for (std::size_t j = 0; j < cross.size(); ++j) {
      const Real lo = cross[j];
      const Real hi = (j + 1 < cross.size()) ? cross[j + 1] : cross[0] + two_pi;
      if (hi - lo <= Real(0)) continue;
      const Real v = f((lo + hi) / Real(2));
      if (v > best_mid_value) {
        best_mid_value = v;
        best_lo = lo;
        best_hi = hi;
      }
    }
    if (!(best_mid_value > gamma)) return gamma;
    const auto r = golden_section_maximize([&](double t) { return double(f(Real(t))); },
                                           double(best_lo), double(best_hi), 1e-7);
    gamma = std::max(best_mid_value, Real(r.value));
  }
  throw Error(ErrorCode::ConvergenceFailure, "numerical radius: level-set iteration did not settle");
}

}  // namespace semihilb
