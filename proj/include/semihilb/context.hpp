#pragma once

// Operators on a space with the semi-inner product <x, y>_A = <Ax, y>.
// All geometry is computed in the reduced picture: for T in B_A(H),
// T~ = P A^{1/2} T (A^{1/2})^+ P acts on ran(A) with the Euclidean
// structure, so ||T||_A = ||T~||, w_A(T) = w(T~) and (T^#)~ = (T~)*.

#include <cstdint>

#include "semihilb/linalg.hpp"

namespace semihilb {

/// Positive semidefinite weight together with its cached factors.
struct SemiInnerContext {
  CMatrix a;           ///< the weight, symmetrized and rank-truncated
  CMatrix a_pinv;      ///< A^+
  CMatrix a_half;      ///< A^{1/2}
  CMatrix a_half_pinv; ///< (A^{1/2})^+
  CMatrix range_proj;  ///< orthogonal projector onto ran(A)
  int rank = 0;
  double rank_tol = kDefaultRankTol;

  Eigen::Index dim() const { return a.rows(); }
};

SemiInnerContext make_context(const CMatrix& a, double rank_tol = kDefaultRankTol);

/// <x, y>_A = y* A x (linear in x, conjugate-linear in y).
cplx semi_inner(const SemiInnerContext& ctx, const CVector& x, const CVector& y);
double vec_seminorm(const SemiInnerContext& ctx, const CVector& x);

/// The distinguished A-adjoint T^# = A^+ T* A.
CMatrix a_adjoint(const SemiInnerContext& ctx, const CMatrix& t);
/// Carrier of T~ = P A^{1/2} T (A^{1/2})^+ P.
struct ReducedOperator {
  CMatrix tilde;
};

ReducedOperator reduce(const SemiInnerContext& ctx, const CMatrix& t);
/// Inverse of reduce on operators supported in ran(A): (A^{1/2})^+ S A^{1/2}.
CMatrix pullback(const SemiInnerContext& ctx, const CMatrix& s);

double op_seminorm(const SemiInnerContext& ctx, const CMatrix& t);
double a_numerical_radius(const SemiInnerContext& ctx, const CMatrix& t, double tol = 1e-8);
/// Sampling lower bound on w_A(T) drawn directly from the definition.
double a_numerical_radius_lower(const SemiInnerContext& ctx, const CMatrix& t, int samples,
                                std::uint64_t seed);
/// Sampling followed by projected gradient ascent of |<Tx, x>_A| on the unit
/// A-sphere. Works from the definition only, so it is independent of the
/// reduction used by a_numerical_radius.
double a_numerical_radius_ascent(const SemiInnerContext& ctx, const CMatrix& t, int samples,
                                 std::uint64_t seed, int iterations = 400);

/// |T|_A^p = (T^# T)^{p/2}, computed as the pullback of |T~|^p.
CMatrix a_abs_power(const SemiInnerContext& ctx, const CMatrix& t, double p);
/// S^p for A-positive S, computed as the pullback of (S~)^p.
CMatrix a_positive_power(const SemiInnerContext& ctx, const CMatrix& s, double p);

bool is_a_selfadjoint(const SemiInnerContext& ctx, const CMatrix& t, double tol = 1e-8);
bool is_a_positive(const SemiInnerContext& ctx, const CMatrix& t, double tol = 1e-8);
/// T maps ker(A) into ker(A), i.e. T lies in B_A(H).
bool preserves_kernel(const SemiInnerContext& ctx, const CMatrix& t, double tol = 1e-8);

}  // namespace semihilb
