#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semihilb/inequalities.hpp"

namespace semihilb {

/// -(a u')' + c u = f on (0, 1), u(0) = u(1) = 0.
struct EllipticSpec {
  int n_points = 8;                         ///< interior grid points N
  std::vector<double> coeff_a{1.0, 0.0, 1.0};  ///< a(x) = sum coeff_a[k] x^k
  double coeff_c = 1.0;
};

double eval_coeff(const std::vector<double>& coeffs, double x);
double eval_coeff_derivative(const std::vector<double>& coeffs, double x);

/// Throws InvalidSpec.
void validate_spec(const EllipticSpec& spec);

struct FdSystem {
  CMatrix t;        ///< conservative three-point stencil, h = 1 / (N + 1)
  CMatrix a;        ///< diag(a(x_j))
  RealVector<double> x;  ///< interior nodes
  double h = 0.0;
};

FdSystem assemble_fd(const EllipticSpec& spec);

/// LHS: largest sampled ||T^-1 f||_A / ||f||_A. RHS: ||T^-1||_A.
/// Intermediates carry w_A(T^-1), the block-matrix radius and its bounds.
BoundReport stability_report(const EllipticSpec& spec, double tol = 1e-8, int samples = 100,
                             std::uint64_t seed = 0);

enum class PreconditionerKind { jacobi, identity, exact };

struct PreconditionerReport {
  PreconditionerKind kind = PreconditionerKind::jacobi;
  double rho = 0.0;          ///< w_A(I - P^-1 T)
  double norm = 0.0;         ///< ||I - P^-1 T||_A
  std::vector<double> error_ratios;  ///< ||e_k||_A / ||e_0||_A, k = 1..iterations
  bool monotone = true;      ///< ratios non-increasing
  bool bound_respected = true;  ///< ratio_k <= rho^k for every k (meaningful when rho < 1)
  bool flagged = false;      ///< rho >= 1 or the rho^k envelope is crossed
};

PreconditionerReport preconditioner_report(const EllipticSpec& spec, PreconditionerKind kind, int iterations,
                                           std::uint64_t seed = 0);

struct ConvergenceRow {
  int n = 0;
  double h = 0.0;
  double norm = 0.0;     ///< ||T^-1||_A
  double radius = 0.0;   ///< w_A(T^-1)
  double bound = 0.0;    ///< inf over lam of (||T^-1||^2lam + ||(T^#)^-1||^2(1-lam)) / 2
  double error = 0.0;    ///< max-norm truncation error for u = sin(pi x)
  double observed_order = 0.0;  ///< log2 of the error ratio to the previous row; 0 on the first
};

/// Max-norm of T_h u_h - f_h for the manufactured solution u = sin(pi x).
double truncation_error(const EllipticSpec& spec);
std::vector<ConvergenceRow> convergence_study(const EllipticSpec& spec, const std::vector<int>& n_values);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace semihilb
