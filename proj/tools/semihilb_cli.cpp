#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semihilb/error.hpp"
#include "semihilb/fuzz.hpp"
#include "semihilb/io.hpp"
#include "semihilb/pde.hpp"
#include "semihilb/worked_examples.hpp"

namespace sh = semihilb;

namespace {

enum Exit : int { kOk = 0, kViolation = 1, kParse = 2, kDomain = 3, kUnknownId = 4 };

constexpr double kViolationThreshold = -1e-8;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split(s, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw sh::Error(sh::ErrorCode::ParseError, "not a number: " + item);
    out.push_back(v);
  }
  return out;
}

sh::AKind parse_a_kind(const std::string& s) {
  static const std::map<std::string, sh::AKind> kinds{{"identity", sh::AKind::identity},
                                                      {"diagonal", sh::AKind::diagonal},
                                                      {"dense_psd", sh::AKind::dense_psd},
                                                      {"rank_deficient", sh::AKind::rank_deficient},
                                                      {"mixed", sh::AKind::mixed}};
  const auto it = kinds.find(s);
  if (it == kinds.end()) throw sh::Error(sh::ErrorCode::ParseError, "unknown A kind: " + s);
  return it->second;
}

sh::TKind parse_t_kind(const std::string& s) {
  static const std::map<std::string, sh::TKind> kinds{{"dense", sh::TKind::dense},
                                                      {"a_commuting", sh::TKind::a_commuting},
                                                      {"a_selfadjoint", sh::TKind::a_selfadjoint},
                                                      {"a_positive", sh::TKind::a_positive}};
  const auto it = kinds.find(s);
  if (it == kinds.end()) throw sh::Error(sh::ErrorCode::ParseError, "unknown operator kind: " + s);
  return it->second;
}

sh::PreconditionerKind parse_preconditioner(const std::string& s) {
  if (s == "jacobi") return sh::PreconditionerKind::jacobi;
  if (s == "identity") return sh::PreconditionerKind::identity;
  if (s == "exact") return sh::PreconditionerKind::exact;
  throw sh::Error(sh::ErrorCode::ParseError, "unknown preconditioner: " + s);
}

const char* preconditioner_name(sh::PreconditionerKind k) {
  switch (k) {
    case sh::PreconditionerKind::jacobi: return "jacobi";
    case sh::PreconditionerKind::identity: return "identity";
    case sh::PreconditionerKind::exact: return "exact";
  }
  return "";
}

int exit_for(const sh::Error& e) {
  switch (e.code()) {
    case sh::ErrorCode::ParseError: return kParse;
    case sh::ErrorCode::UnknownId: return kUnknownId;
    default: return kDomain;
  }
}

void print(const sh::Json& j) { std::cout << j.dump(2) << '\n'; }

struct ComputeArgs {
  std::string kind;
  std::string a_file;
  std::string t_file;
  double tol = 1e-8;
  double rank_tol = sh::kDefaultRankTol;
  double power = 1.0;
};

int run_compute(const ComputeArgs& args) {
  const sh::SemiInnerContext ctx = sh::make_context(sh::read_matrix_file(args.a_file), args.rank_tol);
  const sh::CMatrix t = sh::read_matrix_file(args.t_file);
  if (t.rows() != ctx.dim() || t.cols() != ctx.dim())
    throw sh::Error(sh::ErrorCode::DimensionMismatch, "T must match the size of A");
  sh::Json out{{"kind", args.kind}};
  if (args.kind == "adjoint") {
    out["matrix"] = sh::matrix_to_json(sh::a_adjoint(ctx, t), "adjoint");
  } else if (args.kind == "seminorm") {
    out["value"] = sh::op_seminorm(ctx, t);
  } else if (args.kind == "radius") {
    out["value"] = sh::a_numerical_radius(ctx, t, args.tol);
  } else {
    out["matrix"] = sh::matrix_to_json(sh::a_abs_power(ctx, t, args.power), "abs_power");
  }
  out["tol"] = args.tol;
  out["rank"] = ctx.rank;
  print(out);
  return kOk;
}

struct CheckArgs {
  std::string id;
  std::string a_file;
  std::vector<std::string> operands;
  std::string scalars;
  std::string replay_file;
  double alpha_re = 2.0;
  double alpha_im = 0.0;
  double beta = 1.0;
  double r = 1.0;
  double mu = 0.5;
  double lam = 0.5;
  double p = 2.0;
};

int report_exit(const sh::BoundReport& rep) {
  return rep.hypotheses_ok && rep.slack < kViolationThreshold ? kViolation : kOk;
}

sh::CaseRecord load_case(const std::string& path) {
  const sh::Json j = sh::read_json_file(path);
  if (j.is_object() && j.contains("sharpest_case")) return sh::case_from_json(j.at("sharpest_case"));
  if (j.is_array() && !j.empty() && j.front().contains("sharpest_case"))
    return sh::case_from_json(j.front().at("sharpest_case"));
  return sh::case_from_json(j);
}

int run_check(const CheckArgs& args) {
  if (!args.replay_file.empty()) {
    const sh::CaseRecord rec = load_case(args.replay_file);
    const sh::BoundReport rep = sh::replay(rec);
    sh::Json out = sh::report_to_json(rep);
    out["stored_lhs"] = rec.lhs;
    out["stored_rhs"] = rec.rhs;
    print(out);
    return report_exit(rep);
  }
  if (args.id.empty()) throw sh::Error(sh::ErrorCode::ParseError, "an inequality id or --replay is required");
  const sh::RegistryEntry& entry = sh::registry_entry(args.id);
  sh::Instance inst;
  inst.params.alpha = sh::cplx(args.alpha_re, args.alpha_im);
  inst.params.beta = args.beta;
  inst.params.r = args.r;
  inst.params.mu = args.mu;
  inst.params.lam = args.lam;
  inst.params.set_p(args.p);
  for (const auto& spec : args.operands) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
      throw sh::Error(sh::ErrorCode::ParseError, "operands are given as NAME=FILE: " + spec);
    inst.operands[spec.substr(0, eq)] = sh::read_matrix_file(spec.substr(eq + 1));
  }
  inst.scalars = parse_doubles(args.scalars);
  sh::SemiInnerContext ctx;
  if (entry.family != sh::Family::scalar) {
    if (args.a_file.empty()) throw sh::Error(sh::ErrorCode::ParseError, "--A is required for " + args.id);
    ctx = sh::make_context(sh::read_matrix_file(args.a_file));
  }
  const sh::BoundReport rep = sh::evaluate(ctx, args.id, inst);
  print(sh::report_to_json(rep));
  return report_exit(rep);
}

struct FuzzArgs {
  std::string ids = "all";
  int dim = 2;
  int dim_max = 4;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::string a_kind = "mixed";
  std::string t_kind = "dense";
  int rank = 1;
  double scale = 1.0;
  std::string out;
};

int run_fuzz(const FuzzArgs& args) {
  sh::GenSpec gen;
  gen.dim = args.dim;
  gen.dim_max = args.dim_max;
  gen.a_kind = parse_a_kind(args.a_kind);
  gen.t_kind = parse_t_kind(args.t_kind);
  gen.rank = args.rank;
  gen.scale = args.scale;
  gen.seed = args.seed;
  sh::validate_spec(gen);
  std::vector<std::string> ids = args.ids == "all" ? sh::registry_ids() : split(args.ids, ',');
  for (const auto& id : ids) sh::registry_entry(id);
  const auto reports = sh::run_campaign(ids, gen, args.trials);
  const sh::Json j = sh::campaigns_to_json(reports);
  if (!args.out.empty()) sh::write_text_file(args.out, j.dump(2) + "\n");
  bool any = false;
  for (const auto& r : reports) {
    std::cout << r.inequality_id << " trials=" << r.trials << " violations=" << r.violations
              << " advisory=" << r.advisory << " min_rel_slack=" << r.min_rel_slack << '\n';
    any = any || r.violations > 0;
  }
  return any ? kViolation : kOk;
}

int run_worked_examples(bool json) {
  const auto rows = sh::worked_example_audit();
  if (json) {
    sh::Json j = sh::Json::array();
    for (const auto& r : rows)
      j.push_back({{"example", r.example},
                   {"quantity", r.quantity},
                   {"printed_value", r.printed_value},
                   {"computed_value", r.computed_value},
                   {"agrees", r.agrees}});
    print(j);
    return kOk;
  }
  std::string current;
  for (const auto& r : rows) {
    if (r.example != current) {
      current = r.example;
      std::cout << "== " << current << '\n';
    }
    std::cout << (r.agrees ? "  agree    " : "  DISAGREE ") << r.quantity << ": printed " << r.printed_value
              << " | computed " << r.computed_value << '\n';
  }
  return kOk;
}

struct PdeArgs {
  int n = 8;
  std::string coeff_a = "1,0,1";
  double coeff_c = 1.0;
  double tol = 1e-8;
  int samples = 100;
  std::uint64_t seed = 0;
  std::string kind = "jacobi";
  int iterations = 20;
  std::string sizes = "8,16,32";
  std::string out;
};

sh::EllipticSpec elliptic_spec(const PdeArgs& args) {
  sh::EllipticSpec spec;
  spec.n_points = args.n;
  spec.coeff_a = parse_doubles(args.coeff_a);
  spec.coeff_c = args.coeff_c;
  sh::validate_spec(spec);
  return spec;
}

int run_pde_stability(const PdeArgs& args) {
  const sh::BoundReport rep = sh::stability_report(elliptic_spec(args), args.tol, args.samples, args.seed);
  print(sh::report_to_json(rep));
  return report_exit(rep);
}

int run_pde_preconditioner(const PdeArgs& args) {
  const auto rep =
      sh::preconditioner_report(elliptic_spec(args), parse_preconditioner(args.kind), args.iterations, args.seed);
  print(sh::Json{{"kind", preconditioner_name(rep.kind)},
                 {"rho", rep.rho},
                 {"norm", rep.norm},
                 {"error_ratios", rep.error_ratios},
                 {"monotone", rep.monotone},
                 {"bound_respected", rep.bound_respected},
                 {"flagged", rep.flagged}});
  return kOk;
}

int run_pde_convergence(const PdeArgs& args) {
  std::vector<int> sizes;
  for (double v : parse_doubles(args.sizes)) sizes.push_back(static_cast<int>(v));
  const std::string csv = sh::convergence_csv(sh::convergence_study(elliptic_spec(args), sizes));
  if (args.out.empty())
    std::cout << csv;
  else
    sh::write_text_file(args.out, csv);
  return kOk;
}

struct OptimizeArgs {
  std::string a_file;
  std::string x_file;
  std::string y_file;
};

int run_optimize(const OptimizeArgs& args) {
  const sh::SemiInnerContext ctx = sh::make_context(sh::read_matrix_file(args.a_file));
  const auto res =
      sh::optimize_refined_alpha_bound(ctx, sh::read_matrix_file(args.x_file), sh::read_matrix_file(args.y_file));
  print(sh::Json{{"lam_star", res.lam_star},
                 {"bound", res.bound},
                 {"norm_x", res.norm_x},
                 {"norm_yadj", res.norm_yadj},
                 {"degenerate", res.degenerate}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical radius inequalities in semi-Hilbertian spaces"};
  app.require_subcommand(1);
  int status = kOk;

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Single A-quantity of an operator");
  c->add_option("kind", compute.kind, "adjoint, seminorm, radius or abs_power")
      ->required()
      ->check(CLI::IsMember({"adjoint", "seminorm", "radius", "abs_power"}));
  c->add_option("--A", compute.a_file, "weight matrix file")->required();
  c->add_option("--T", compute.t_file, "operator matrix file")->required();
  c->add_option("--tol", compute.tol, "radius tolerance");
  c->add_option("--rank-tol", compute.rank_tol, "relative rank cutoff for A");
  c->add_option("--power", compute.power, "exponent for abs_power");
  c->callback([&] { status = run_compute(compute); });

  CheckArgs check;
  auto* k = app.add_subcommand("check", "Evaluate one registered inequality");
  k->add_option("id", check.id, "inequality id");
  k->add_option("--A", check.a_file, "weight matrix file");
  k->add_option("--operand", check.operands, "NAME=FILE, repeatable");
  k->add_option("--scalars", check.scalars, "comma-separated inputs of the scalar lemmas");
  k->add_option("--alpha-re", check.alpha_re);
  k->add_option("--alpha-im", check.alpha_im);
  k->add_option("--beta", check.beta);
  k->add_option("--r", check.r);
  k->add_option("--mu", check.mu);
  k->add_option("--lam", check.lam);
  k->add_option("--p", check.p);
  k->add_option("--replay", check.replay_file, "case record or campaign file to re-evaluate");
  k->callback([&] { status = run_check(check); });

  auto* l = app.add_subcommand("list", "Print the registered inequality ids");
  l->callback([&] {
    for (const auto& e : sh::registry()) std::cout << e.id << "  " << e.statement << '\n';
  });

  FuzzArgs fuzz;
  auto* f = app.add_subcommand("fuzz", "Randomized soundness campaign");
  f->add_option("--ids", fuzz.ids, "comma-separated ids or all");
  f->add_option("--dim", fuzz.dim, "smallest dimension");
  f->add_option("--dim-max", fuzz.dim_max, "largest dimension");
  f->add_option("--trials", fuzz.trials, "trials per id");
  f->add_option("--seed", fuzz.seed);
  f->add_option("--a-kind", fuzz.a_kind, "identity, diagonal, dense_psd, rank_deficient or mixed");
  f->add_option("--t-kind", fuzz.t_kind, "dense, a_commuting, a_selfadjoint or a_positive");
  f->add_option("--rank", fuzz.rank, "rank of rank_deficient weights");
  f->add_option("--scale", fuzz.scale);
  f->add_option("--out", fuzz.out, "campaign JSON output file");
  f->callback([&] { status = run_fuzz(fuzz); });

  bool examples_json = false;
  auto* w = app.add_subcommand("worked-examples", "Recompute the three worked examples");
  w->add_flag("--json", examples_json);
  w->callback([&] { status = run_worked_examples(examples_json); });

  PdeArgs pde;
  auto* p = app.add_subcommand("pde", "One-dimensional elliptic model problem");
  p->require_subcommand(1);
  auto add_spec = [&](CLI::App* s) {
    s->add_option("--n", pde.n, "interior grid points");
    s->add_option("--a", pde.coeff_a, "polynomial coefficients of a(x), lowest first");
    s->add_option("--c", pde.coeff_c);
    s->add_option("--seed", pde.seed);
  };
  auto* ps = p->add_subcommand("stability", "Stability report of the discrete inverse");
  add_spec(ps);
  ps->add_option("--tol", pde.tol);
  ps->add_option("--samples", pde.samples);
  ps->callback([&] { status = run_pde_stability(pde); });
  auto* pp = p->add_subcommand("preconditioner", "Preconditioned Richardson iteration");
  add_spec(pp);
  pp->add_option("--kind", pde.kind, "jacobi, identity or exact");
  pp->add_option("--iterations", pde.iterations);
  pp->callback([&] { status = run_pde_preconditioner(pde); });
  auto* pc = p->add_subcommand("convergence", "Convergence CSV over grid sizes");
  add_spec(pc);
  pc->add_option("--sizes", pde.sizes, "comma-separated N values");
  pc->add_option("--out", pde.out, "CSV output file");
  pc->callback([&] { status = run_pde_convergence(pde); });

  OptimizeArgs opt;
  auto* o = app.add_subcommand("optimize", "Minimize the refined alpha bound over lambda");
  o->add_option("--A", opt.a_file)->required();
  o->add_option("--X", opt.x_file)->required();
  o->add_option("--Y", opt.y_file)->required();
  o->callback([&] { status = run_optimize(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  } catch (const sh::Error& e) {
    std::cerr << e.what() << '\n';
    if (e.code() == sh::ErrorCode::UnknownId) {
      std::cerr << "valid ids:";
      for (const auto& id : sh::registry_ids()) std::cerr << ' ' << id;
      std::cerr << '\n';
    }
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return status;
}
