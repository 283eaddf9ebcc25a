#include "semihilb/worked_examples.hpp"

#include <cmath>
#include <sstream>

#include "calc.hpp"

namespace semihilb {

std::string format_number(double v) {
  std::ostringstream out;
  out.precision(10);
  out << (std::abs(v) < 5e-15 ? 0.0 : v);
  return out.str();
}

std::string format_matrix(const CMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (k) out << ", ";
      const cplx z = m(i, k);
      out << format_number(z.real());
      if (std::abs(z.imag()) > 5e-15) out << (z.imag() < 0 ? " - " : " + ") << format_number(std::abs(z.imag())) << 'i';
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace {

CMatrix mat2(double a, double b, double c, double d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

struct Table {
  std::vector<AuditRow> rows;
  std::string example;

  void number(const std::string& q, double printed, double computed, double tol) {
    rows.push_back({example, q, format_number(printed), format_number(computed), std::abs(printed - computed) <= tol});
  }
  void matrix(const std::string& q, const CMatrix& printed, const CMatrix& computed) {
    rows.push_back({example, q, format_matrix(printed), format_matrix(computed),
                    (printed - computed).cwiseAbs().maxCoeff() <= 1e-10});
  }
  void claim(const std::string& q, const std::string& printed, const std::string& computed, bool agrees) {
    rows.push_back({example, q, printed, computed, agrees});
  }
};

void diagonal_example(Table& t) {
  t.example = "diagonal weight";
  const CMatrix a = mat2(1, 0, 0, 2);
  const CMatrix x = mat2(1, 0, 0, 2);
  const CMatrix y = mat2(2, 0, 0, 1);
  const SemiInnerContext ctx = make_context(a);
  const detail::ACalc c(ctx);
  t.matrix("A^+", mat2(1, 0, 0, 0.5), ctx.a_pinv);
  t.matrix("Y^#", y, c.adj(y));
  t.number("||X||_A", 2.0, c.norm(x), 1e-10);
  t.number("||Y||_A", 2.0, c.norm(y), 1e-10);
  const RefinedAlphaResult opt = optimize_refined_alpha_bound(ctx, x, y);
  t.number("optimal lambda", 0.5, opt.lam_star, 1e-10);
  t.number("refined bound", 2.0, opt.bound, 1e-10);
  const SemiInnerContext ctx2 = dsum_context(ctx, 2);
  const CMatrix block = assemble(BlockSpec::antidiag(x, y));
  const double w = a_numerical_radius(ctx2, block, 1e-12);
  t.number("w of the block matrix (reduction oracle)", 2.0, w, 1e-6);
  t.number("w of the block matrix (ascent oracle)", 2.0, a_numerical_radius_ascent(ctx2, block, 2000, 11), 1e-6);
  t.claim("block radius within the refined bound", "w <= 2", format_number(w) + " <= " + format_number(opt.bound),
          w <= opt.bound + 1e-8);
}

void rank_one_example(Table& t) {
  t.example = "rank-one weight";
  const CMatrix a = mat2(1, 1, 1, 1);
  const CMatrix x = mat2(2, 1, -1, 2);
  const CMatrix y = mat2(2, 3, 1, -1);
  const SemiInnerContext ctx = make_context(a);
  const detail::ACalc c(ctx);
  const CMatrix xs = c.adj(x);
  const CMatrix ys = c.adj(y);
  t.matrix("A^+", a / 4.0, ctx.a_pinv);
  t.matrix("X^#", mat2(3, 3, 3, 3) / 4.0, xs);
  t.matrix("Y^#", mat2(5, 5, 5, 5) / 4.0, ys);
  t.claim("X maps ker A into ker A", "yes", c.in_domain(x) ? "yes" : "no", c.in_domain(x));
  t.claim("Y maps ker A into ker A", "yes", c.in_domain(y) ? "yes" : "no", c.in_domain(y));
  t.matrix("X^# X + Y Y^#", mat2(28, 34, 3, 9) / 4.0, xs * x + y * ys);
  t.matrix("X X^# + Y^# Y", mat2(24, 19, 18, 13) / 4.0, x * xs + ys * y);
  t.number("||X^# X + Y Y^#||_A", 18.741, c.norm(xs * x + y * ys), 5e-4);
  t.number("||X X^# + Y^# Y||_A", 18.668, c.norm(x * xs + ys * y), 5e-4);
  t.matrix("XY", mat2(5, 5, 0, -5), x * y);
  t.matrix("YX", mat2(1, 8, 3, -1), y * x);
  t.number("w_A(XY)", 6.03, c.radius(x * y), 5e-3);
  t.number("w_A(YX)", 11.2, c.radius(y * x), 5e-2);
  const auto k = detail::buzano_constants(cplx(2.0, 0.0), 1.0);
  t.number("delta1", 0.75, k.delta1, 1e-15);
  t.number("delta2", 0.25, k.delta2, 1e-15);
  Instance inst;
  inst.operands = {{"X", x}, {"Y", y}};
  inst.params.alpha = 2.0;
  inst.params.beta = 1.0;
  const BoundReport rep = evaluate(ctx, "moby_a1", inst);
  t.number("moby_a1 right-hand side", 97.214, rep.rhs, 5e-4);
  const double w = rep.intermediates.at("w");
  t.number("w of the block matrix", 2.958, w, 5e-4);
  t.number("w^4 of the block matrix", 76.558, rep.lhs, 5e-4);
  t.claim("moby_a1 holds on these inputs", "76.558 <= 97.214",
          format_number(rep.lhs) + " <= " + format_number(rep.rhs), rep.slack >= 0.0);
}

void control_example(Table& t) {
  t.example = "control system";
  const CMatrix a = mat2(2, 0, 0, 1);
  const CMatrix x = mat2(1, 0.5, 0, 1);
  const CMatrix y = mat2(1, 0, 0.5, 1);
  const SemiInnerContext ctx = make_context(a);
  const detail::ACalc c(ctx);
  const CMatrix ys = c.adj(y);
  t.matrix("Y^#", mat2(1, 0.5, 0, 1), ys);
  t.number("||X||_A", 2.29, c.norm(x), 5e-3);
  t.number("||Y^#||_A", 2.29, c.norm(ys), 5e-3);
  const RefinedAlphaResult opt = optimize_refined_alpha_bound(ctx, x, y);
  t.number("optimal lambda", 0.5, opt.lam_star, 1e-6);
  t.number("refined bound", 2.29, opt.bound, 5e-3);
  const double w = a_numerical_radius(dsum_context(ctx, 2), assemble(BlockSpec::antidiag(x, y)), 1e-12);
  t.claim("block radius within the printed bound", "w <= 2.29", format_number(w) + " <= 2.29", w <= 2.29);
  t.claim("block radius within the recomputed refined bound", "w <= bound",
          format_number(w) + " <= " + format_number(opt.bound), w <= opt.bound + 1e-8);
}

}  // namespace

std::vector<AuditRow> worked_example_audit() {
  Table t;
  diagonal_example(t);
  rank_one_example(t);
  control_example(t);
  return t.rows;
}

}  // namespace semihilb
