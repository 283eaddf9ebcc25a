#include "semihilb/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace semihilb {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t trial, const std::string& salt) {
  const std::uint64_t tag = fnv1a(salt);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32)};
  return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

CMatrix gaussian(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> nd(0.0, 1.0);
  CMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = nd(rng);
      const double im = nd(rng);
      g(i, j) = cplx(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

CMatrix kernel_part(std::mt19937_64& rng, const SemiInnerContext& ctx, double s) {
  const Eigen::Index n = ctx.dim();
  const CMatrix q = CMatrix::Identity(n, n) - ctx.range_proj;
  return s * q * gaussian(rng, n, n) * q;
}

cplx sample_alpha(std::mt19937_64& rng) {
  while (true) {
    const cplx a(uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0));
    if (std::abs(a) <= 3.0 && std::abs(a) >= 0.1) return a;
  }
}

BoundParams sample_params(std::mt19937_64& rng, const RegistryEntry& entry) {
  namespace pb = param_bits;
  BoundParams p;
  if (entry.params & pb::alpha) p.alpha = uniform(rng, 0.0, 1.0) < 0.2 ? cplx(2.0, 0.0) : sample_alpha(rng);
  if (entry.params & pb::beta) p.beta = uniform(rng, 0.0, 1.0) < 0.15 ? 0.0 : uniform(rng, 0.0, 5.0);
  if (entry.params & pb::r) {
    if (entry.family == Family::holder_mccarthy) {
      p.r = uniform(rng, 0.0, 1.0) < 0.5 ? uniform(rng, 0.0, 1.0) : uniform(rng, 1.0, 3.0);
    } else {
      p.r = uniform(rng, 0.0, 1.0) < 0.2 ? 1.0 : uniform(rng, 1.0, 3.0);
    }
  }
  auto unit_param = [&]() {
    const double u = uniform(rng, 0.0, 1.0);
    if (u < 0.1) return 0.0;
    if (u < 0.2) return 1.0;
    if (u < 0.3) return 0.5;
    return uniform(rng, 0.0, 1.0);
  };
  if (entry.params & pb::mu) p.mu = unit_param();
  if (entry.params & pb::lam) p.lam = unit_param();
  if (entry.params & pb::pq) {
    const double lo = std::max(1.05, 2.0 / p.r);
    const double hi = p.r >= 2.0 ? 6.0 : std::min(6.0, 2.0 / (2.0 - p.r));
    p.set_p(hi > lo ? uniform(rng, lo, hi) : 2.0);
  }
  return p;
}

CVector random_vector(std::mt19937_64& rng, Eigen::Index n, double s) { return s * gaussian(rng, n, 1); }

CVector random_unit(std::mt19937_64& rng, const SemiInnerContext& ctx) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const CVector x = gaussian(rng, ctx.dim(), 1);
    const double nx = vec_seminorm(ctx, x);
    if (nx > 1e-3) return x / nx;
  }
  throw Error(ErrorCode::DegenerateContext, "cannot draw a vector with nonzero A-seminorm");
}

}  // namespace

void validate_spec(const GenSpec& spec) {
  if (spec.dim < 1) throw Error(ErrorCode::InvalidSpec, "dim must be >= 1");
  if (spec.dim_max != 0 && spec.dim_max < spec.dim) throw Error(ErrorCode::InvalidSpec, "dim_max must be >= dim");
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) throw Error(ErrorCode::InvalidSpec, "scale must be finite and > 0");
  if (spec.a_kind == AKind::rank_deficient && (spec.rank < 1 || spec.rank > spec.dim)) {
    throw Error(ErrorCode::InvalidSpec, "rank must lie in [1, dim]");
  }
}

CMatrix gen_weight(std::mt19937_64& rng, AKind kind, int dim, int rank, double scale) {
  const Eigen::Index n = dim;
  switch (kind) {
    case AKind::identity:
      return CMatrix::Identity(n, n);
    case AKind::diagonal: {
      CMatrix a = CMatrix::Zero(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        a(i, i) = uniform(rng, 0.0, 1.0) < 0.2 ? 0.0 : scale * log_uniform(rng, 0.1, 10.0);
      }
      if (a.diagonal().real().maxCoeff() <= 0.0) a(0, 0) = scale;
      return a;
    }
    case AKind::dense_psd: {
      const CMatrix g = gaussian(rng, n, n);
      return scale * (g.adjoint() * g / static_cast<double>(n) + 1e-6 * CMatrix::Identity(n, n));
    }
    case AKind::rank_deficient:
    case AKind::mixed: {
      const CMatrix g = gaussian(rng, n, n);
      CMatrix d = CMatrix::Zero(n, n);
      for (int i = 0; i < std::clamp(rank, 1, dim); ++i) d(i, i) = log_uniform(rng, 0.1, 10.0);
      const CMatrix a = scale * g.adjoint() * d * g;
      return (a + a.adjoint()) / 2.0;
    }
  }
  return CMatrix::Identity(n, n);
}

CMatrix gen_operator(std::mt19937_64& rng, const SemiInnerContext& ctx, TKind kind, double scale) {
  const Eigen::Index n = ctx.dim();
  const CMatrix& p = ctx.range_proj;
  const CMatrix id = CMatrix::Identity(n, n);
  switch (kind) {
    case TKind::dense: {
      const CMatrix g = scale * gaussian(rng, n, n);
      return g - p * g * (id - p);
    }
    case TKind::a_commuting: {
      const double an = std::max(spectral_norm(ctx.a), 1e-300);
      const CMatrix base = ctx.a / an;
      CMatrix t = CMatrix::Zero(n, n);
      CMatrix power = id;
      for (Eigen::Index k = 0; k < n; ++k) {
        t += scale * uniform(rng, -2.0, 2.0) * power;
        power = power * base;
      }
      return t;
    }
    case TKind::a_selfadjoint: {
      const CMatrix g = gaussian(rng, n, n);
      const CMatrix h = scale * p * (g + g.adjoint()) * p / 2.0;
      return pullback(ctx, h) + kernel_part(rng, ctx, scale);
    }
    case TKind::a_positive: {
      const CMatrix b = gaussian(rng, n, n);
      const CMatrix h = scale * p * b.adjoint() * b * p / static_cast<double>(n);
      return pullback(ctx, CMatrix((h + h.adjoint()) / 2.0)) + kernel_part(rng, ctx, scale);
    }
  }
  return id;
}

SemiInnerContext gen_context(const GenSpec& spec) {
  validate_spec(spec);
  auto rng = make_rng(spec.seed, 0, "context");
  AKind kind = spec.a_kind;
  if (kind == AKind::mixed) kind = static_cast<AKind>(uniform_int(rng, 0, 3));
  const int rank = spec.a_kind == AKind::mixed ? uniform_int(rng, 1, std::max(1, spec.dim - 1)) : spec.rank;
  return make_context(gen_weight(rng, kind, spec.dim, rank, spec.scale));
}

CMatrix gen_operator(const SemiInnerContext& ctx, const GenSpec& spec) {
  validate_spec(spec);
  auto rng = make_rng(spec.seed, 0, "operator");
  return gen_operator(rng, ctx, spec.t_kind, spec.scale);
}

CaseRecord run_trial(const std::string& id, const GenSpec& gen, std::uint64_t trial) {
  const RegistryEntry& entry = registry_entry(id);
  auto rng = make_rng(gen.seed, trial, id);
  const int dim = gen.dim_max > gen.dim ? uniform_int(rng, gen.dim, gen.dim_max) : gen.dim;
  AKind kind = gen.a_kind;
  if (kind == AKind::mixed) kind = static_cast<AKind>(uniform_int(rng, 0, 3));
  if (kind == AKind::rank_deficient && dim < 2) kind = AKind::diagonal;
  const int rank = gen.a_kind == AKind::mixed ? uniform_int(rng, 1, std::max(1, dim - 1))
                                               : std::clamp(gen.rank, 1, std::max(1, dim - 1));

  CaseRecord rec;
  rec.inequality_id = id;
  rec.trial = trial;
  rec.weight = gen_weight(rng, kind, dim, rank, gen.scale);
  const SemiInnerContext ctx = make_context(rec.weight);
  Instance& inst = rec.instance;
  inst.params = sample_params(rng, entry);

  TKind tk = gen.t_kind;
  if (entry.operand_class == OperandClass::a_commuting) tk = TKind::a_commuting;
  if (entry.operand_class == OperandClass::a_positive) tk = TKind::a_positive;
  const double s = gen.scale * log_uniform(rng, 0.25, 4.0);

  switch (entry.family) {
    case Family::scalar: {
      const int count = id == "jensen" ? 2 : uniform_int(rng, 1, 6);
      for (int i = 0; i < count; ++i) inst.scalars.push_back(log_uniform(rng, 1e-2, 1e2));
      if (id == "jensen" && uniform(rng, 0.0, 1.0) < 0.1) inst.scalars[1] = inst.scalars[0];
      break;
    }
    case Family::vector: {
      const CVector a = random_vector(rng, dim, s);
      CVector b = random_vector(rng, dim, s);
      CVector e = random_unit(rng, ctx);
      const double u = uniform(rng, 0.0, 1.0);
      if (u < 0.15) b = cplx(uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)) * a;
      if (u > 0.9 && vec_seminorm(ctx, a) > 1e-3) e = a / vec_seminorm(ctx, a);
      inst.operands = {{"a", a}, {"b", b}, {"e", e}};
      break;
    }
    case Family::mixed_schwarz:
      inst.operands = {{"T", gen_operator(rng, ctx, tk, s)},
                       {"x", random_vector(rng, dim, 1.0)},
                       {"y", random_vector(rng, dim, 1.0)}};
      break;
    case Family::holder_mccarthy:
      inst.operands = {{"T", gen_operator(rng, ctx, tk, s)}, {"x", random_unit(rng, ctx)}};
      break;
    default:
      for (const auto& name : entry.operands) inst.operands[name] = gen_operator(rng, ctx, tk, s);
      break;
  }

  const BoundReport rep = evaluate(ctx, id, inst);
  inst.params = rep.params;
  rec.lhs = rep.lhs;
  rec.rhs = rep.rhs;
  rec.rel_slack = rep.rel_slack;
  rec.hypotheses_ok = rep.hypotheses_ok;
  rec.intermediates = rep.intermediates;
  return rec;
}

std::vector<CampaignReport> run_campaign(const std::vector<std::string>& ids, const GenSpec& gen,
                                         std::uint64_t trials) {
  validate_spec(gen);
  if (trials < 1) throw Error(ErrorCode::InvalidSpec, "trials must be >= 1");
  for (const auto& id : ids) registry_entry(id);
  std::vector<CampaignReport> out;
  for (const auto& id : ids) {
    CampaignReport rep;
    rep.inequality_id = id;
    rep.trials = trials;
    rep.seed = gen.seed;
    rep.min_rel_slack = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    std::uint64_t counted = 0;
    bool have_sharpest = false;
    for (std::uint64_t t = 0; t < trials; ++t) {
      CaseRecord rec = run_trial(id, gen, t);
      if (!rec.hypotheses_ok) {
        ++rep.advisory;
        if (!have_sharpest && t == 0) rep.sharpest_case = rec;
        continue;
      }
      sum += rec.rel_slack;
      ++counted;
      for (const auto& [name, value] : rec.intermediates) {
        if (name.rfind("audit_", 0) != 0) continue;
        auto& count = rep.audit_violations[name];
        if ((value - rec.lhs) / std::max(1.0, std::abs(value)) < -1e-8) ++count;
      }
      if (rec.rel_slack < -1e-8) {
        ++rep.violations;
        rep.violation_cases.push_back(rec);
      }
      if (rec.rel_slack < rep.min_rel_slack) {
        rep.min_rel_slack = rec.rel_slack;
        rep.sharpest_case = std::move(rec);
        have_sharpest = true;
      }
    }
    if (counted == 0) rep.min_rel_slack = 0.0;
    rep.mean_rel_slack = counted > 0 ? sum / static_cast<double>(counted) : 0.0;
    out.push_back(std::move(rep));
  }
  return out;
}

BoundReport replay(const CaseRecord& rec) {
  const SemiInnerContext ctx = make_context(rec.weight);
  return evaluate(ctx, rec.inequality_id, rec.instance);
}

}  // namespace semihilb
