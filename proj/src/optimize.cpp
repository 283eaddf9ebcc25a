#include <algorithm>
#include <cmath>
#include <limits>

#include "calc.hpp"
#include "semihilb/golden.hpp"

namespace semihilb {

double refined_alpha_objective(double u, double v, double lam) {
  return 0.5 * (detail::power0(u, 2.0 * lam) + detail::power0(v, 2.0 * (1.0 - lam)));
}

namespace detail {

RefinedAlphaResult refined_alpha_min(double u, double v) {
  RefinedAlphaResult res;
  res.norm_x = u;
  res.norm_yadj = v;
  if (u == v) {
    res.lam_star = 0.5;
    res.bound = refined_alpha_objective(u, v, 0.5);
    res.degenerate = !(u > 0.0);
    if (res.degenerate) res.bound = 0.0;
    return res;
  }
  auto f = [&](double l) { return refined_alpha_objective(u, v, l); };
  if (!(u > 0.0) || !(v > 0.0)) {
    res.degenerate = true;
    const double f0 = f(0.0);
    const double f1 = f(1.0);
    res.lam_star = f0 <= f1 ? 0.0 : 1.0;
    res.bound = std::min(f0, f1);
    return res;
  }
  const ScalarMinimum m = golden_section_minimize(f, 0.0, 1.0, 1e-10);
  res.lam_star = m.x;
  res.bound = m.value;
  for (double end : {0.0, 1.0}) {
    if (f(end) < res.bound) {
      res.lam_star = end;
      res.bound = f(end);
    }
  }
  return res;
}

}  // namespace detail

RefinedAlphaResult optimize_refined_alpha_bound(const SemiInnerContext& ctx, const CMatrix& x, const CMatrix& y) {
  const Eigen::Index n = ctx.dim();
  if (x.rows() != n || x.cols() != n || y.rows() != n || y.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "optimize_refined_alpha_bound: operand shape differs from the weight");
  }
  const detail::ACalc c(ctx);
  return detail::refined_alpha_min(c.norm(x), c.norm(c.adj(y)));
}

namespace {

enum class Knob { beta, r, mu, lam, p };

void set_knob(BoundParams& p, Knob k, double v) {
  switch (k) {
    case Knob::beta: p.beta = v; break;
    case Knob::r: p.r = v; break;
    case Knob::mu: p.mu = v; break;
    case Knob::lam: p.lam = v; break;
    case Knob::p: p.set_p(v); break;
  }
}

double get_knob(const BoundParams& p, Knob k) {
  switch (k) {
    case Knob::beta: return p.beta;
    case Knob::r: return p.r;
    case Knob::mu: return p.mu;
    case Knob::lam: return p.lam;
    case Knob::p: return p.p;
  }
  return 0.0;
}

}  // namespace

BoundReport optimize_params(const SemiInnerContext& ctx, const std::string& id, const Instance& inst,
                            const GridSpec& grid) {
  const RegistryEntry& entry = registry_entry(id);
  namespace pb = param_bits;

  std::vector<cplx> alphas = grid.alpha_values;
  if (alphas.empty() || !(entry.params & pb::alpha)) alphas = {grid.base.alpha};
  struct Axis {
    Knob knob;
    std::vector<double> values;
  };
  std::vector<Axis> axes;
  auto add_axis = [&](Knob knob, unsigned bit, const std::vector<double>& vals) {
    if (!(entry.params & bit) || vals.empty()) return;
    std::vector<double> v = vals;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (knob == Knob::beta && entry.beta_monotone && v.size() > 2) v = {v.front(), v.back()};
    axes.push_back({knob, v});
  };
  add_axis(Knob::beta, pb::beta, grid.beta_values);
  add_axis(Knob::r, pb::r, grid.r_values);
  add_axis(Knob::mu, pb::mu, grid.mu_values);
  add_axis(Knob::lam, pb::lam, grid.lam_values);
  add_axis(Knob::p, pb::pq, grid.p_values);

  auto try_eval = [&](const BoundParams& p, BoundReport& out) {
    try {
      validate_params(entry, p);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DomainViolation) return false;
      throw;
    }
    Instance local = inst;
    local.params = p;
    out = evaluate(ctx, id, local);
    return true;
  };

  bool found = false;
  BoundReport best;
  for (const cplx& alpha : alphas) {
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
      BoundParams p = grid.base;
      p.alpha = alpha;
      for (std::size_t i = 0; i < axes.size(); ++i) set_knob(p, axes[i].knob, axes[i].values[idx[i]]);
      BoundReport rep;
      if (try_eval(p, rep) && (!found || rep.rhs < best.rhs)) {
        best = rep;
        found = true;
      }
      std::size_t i = 0;
      while (i < axes.size() && ++idx[i] == axes[i].values.size()) idx[i++] = 0;
      if (i == axes.size()) break;
    }
  }
  if (!found) throw Error(ErrorCode::DomainViolation, id + ": no grid point lies in the parameter domain");

  if (grid.refine) {
    for (const Axis& axis : axes) {
      if (axis.values.size() < 2) continue;
      if (axis.knob == Knob::beta && entry.beta_monotone) continue;
      const double cur = get_knob(best.params, axis.knob);
      auto it = std::lower_bound(axis.values.begin(), axis.values.end(), cur);
      const std::size_t k = static_cast<std::size_t>(it - axis.values.begin());
      const double lo = axis.values[k == 0 ? 0 : k - 1];
      const double hi = axis.values[std::min(k + 1, axis.values.size() - 1)];
      if (!(hi > lo)) continue;
      auto rhs_at = [&](double v) {
        BoundParams p = best.params;
        set_knob(p, axis.knob, v);
        BoundReport rep;
        return try_eval(p, rep) ? rep.rhs : std::numeric_limits<double>::infinity();
      };
      const ScalarMinimum m = golden_section_minimize(rhs_at, lo, hi, 1e-8 * std::max(1.0, hi - lo));
      if (m.value < best.rhs) {
        BoundParams p = best.params;
        set_knob(p, axis.knob, m.x);
        BoundReport rep;
        if (try_eval(p, rep)) best = rep;
      }
    }
  }
  return best;
}

}  // namespace semihilb
