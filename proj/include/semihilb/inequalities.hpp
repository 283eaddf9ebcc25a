#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semihilb/block.hpp"
#include "semihilb/context.hpp"

namespace semihilb {

/// Free parameters shared by the inequality families.
struct BoundParams {
  cplx alpha{2.0, 0.0};  ///< Buzano parameter, nonzero
  double beta = 1.0;     ///< >= 0
  double r = 1.0;        ///< >= 1
  double mu = 0.5;       ///< in [0, 1]
  double lam = 0.5;      ///< power-pair exponent in [0, 1]
  double p = 2.0;        ///< Hoelder pair, p, q > 1, 1/p + 1/q = 1
  double q = 2.0;

  /// Sets p and its conjugate exponent together.
  void set_p(double value) {
    p = value;
    q = value / (value - 1.0);
  }
};

/// One checker evaluation.
struct BoundReport {
  std::string inequality_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;      ///< rhs - lhs
  double rel_slack = 0.0;  ///< slack / max(1, |rhs|)
  std::map<std::string, double> intermediates;
  bool hypotheses_ok = true;  ///< false marks the report advisory
  BoundParams params;

  bool violated(double threshold = -1e-8) const { return hypotheses_ok && rel_slack < threshold; }
};

/// Fills slack and rel_slack from lhs and rhs.
BoundReport make_report(std::string id, double lhs, double rhs, const BoundParams& params);

/// Named operands: matrices X, Y, F, K, M, T1, T2, S1, S2, T and vectors a, b, e, x, y (n x 1).
using Operands = std::map<std::string, CMatrix>;

/// Everything a registry checker consumes besides the context.
struct Instance {
  Operands operands;
  std::vector<double> scalars;  ///< inputs of the scalar lemmas
  BoundParams params;
};

enum class Family { scalar, vector, mixed_schwarz, holder_mccarthy, matrix, single, product };

/// Hypothesis class an operand generator must honor for a given id.
enum class OperandClass { any, a_commuting, a_positive };

namespace param_bits {
inline constexpr unsigned alpha = 1u << 0;
inline constexpr unsigned beta = 1u << 1;
inline constexpr unsigned r = 1u << 2;
inline constexpr unsigned mu = 1u << 3;
inline constexpr unsigned lam = 1u << 4;
inline constexpr unsigned pq = 1u << 5;
}  // namespace param_bits

struct RegistryEntry {
  std::string id;
  Family family;
  std::vector<std::string> operands;
  unsigned params = 0;  ///< param_bits used by the id
  OperandClass operand_class = OperandClass::any;
  bool beta_monotone = false;  ///< RHS non-decreasing in beta
  std::string statement;
};

/// Immutable registry, built on first use.
const std::vector<RegistryEntry>& registry();
const RegistryEntry& registry_entry(const std::string& id);  ///< throws UnknownId
std::vector<std::string> registry_ids();
std::vector<std::string> registry_ids(Family family);

/// Validates the parameters an id uses; throws DomainViolation.
void validate_params(const RegistryEntry& entry, const BoundParams& params);

/// Dispatches an instance to the checker of its family.
BoundReport evaluate(const SemiInnerContext& ctx, const std::string& id, const Instance& inst);

// Individual checker families.

/// jensen yields two chained links (weighted AM-GM, power mean); bohr one.
std::vector<BoundReport> check_scalar_lemma(const std::string& id, const std::vector<double>& inputs,
                                            const BoundParams& params);
BoundReport check_vector_lemma(const SemiInnerContext& ctx, const std::string& id, const CVector& a,
                               const CVector& b, const CVector& e, const BoundParams& params);
BoundReport check_mixed_schwarz(const SemiInnerContext& ctx, const CMatrix& t, const CVector& x,
                                const CVector& y, double lam);
BoundReport check_holder_mccarthy(const SemiInnerContext& ctx, const CMatrix& t, const CVector& x,
                                  double r);
/// blocks: X, Y (and F, K for kz, modified_kz).
BoundReport check_matrix_bound(const SemiInnerContext& ctx, const std::string& id,
                               const Operands& blocks, const BoundParams& params);
BoundReport check_single_operator_bound(const SemiInnerContext& ctx, const std::string& id,
                                        const CMatrix& m, const BoundParams& params);
/// operators: T1, T2, S1, S2 for prod1, prod2; F, K for the corollaries.
BoundReport check_product_bound(const SemiInnerContext& ctx, const std::string& id,
                                const Operands& operators, const BoundParams& params);

/// Functional calculus on |T|_A for a general nonnegative function h:
/// returns the pullback of h(|T~|), with h applied only on ran(A).
CMatrix a_abs_function(const SemiInnerContext& ctx, const CMatrix& t,
                       const std::function<double(double)>& h);

struct RefinedAlphaResult {
  double lam_star = 0.5;
  double bound = 0.0;
  double norm_x = 0.0;     ///< ||X||_A
  double norm_yadj = 0.0;  ///< ||Y^#||_A
  bool degenerate = false; ///< a norm vanished; endpoint evaluation used
};

/// Minimizes f(lam) = (||X||_A^{2 lam} + ||Y^#||_A^{2(1 - lam)}) / 2 over [0, 1].
RefinedAlphaResult optimize_refined_alpha_bound(const SemiInnerContext& ctx, const CMatrix& x,
                                                const CMatrix& y);
/// f(lam) for given norms, with 0^0 = 0.
double refined_alpha_objective(double u, double v, double lam);

/// Finite candidate values per parameter; parameters left empty keep the
/// value from `base`. Complex alpha is searched over alpha_values.
struct GridSpec {
  BoundParams base;
  std::vector<cplx> alpha_values;
  std::vector<double> beta_values;
  std::vector<double> r_values;
  std::vector<double> mu_values;
  std::vector<double> lam_values;
  std::vector<double> p_values;
  bool refine = true;  ///< golden-section polish of real parameters around the best grid point
};

/// Returns the evaluation with the smallest RHS over the grid.
BoundReport optimize_params(const SemiInnerContext& ctx, const std::string& id, const Instance& inst,
                            const GridSpec& grid);

}  // namespace semihilb
