#include <doctest.h>

#include <set>

#include "../src/calc.hpp"
#include "helpers.hpp"

using namespace testing_support;

namespace {

Instance diagonal_instance() {
  Instance in;
  const CMatrix x = mat2(1, 0, 0, 2);
  const CMatrix y = mat2(2, 0, 0, 1);
  in.operands = {{"X", x}, {"Y", y}, {"F", x}, {"K", y}};
  return in;
}

SemiInnerContext diagonal_context() { return make_context(mat2(1, 0, 0, 2)); }

struct FixedCase {
  SemiInnerContext ctx;
  Instance inst;
};

FixedCase fixed_rank_two_case() {
  CMatrix w(3, 3);
  w << 2, 1, 0, 1, 2, 0, 0, 0, 0;
  CMatrix m(3, 3);
  m << cplx(1, 1), 2, 0, 0, -1, 0, 0, 0, 3;
  FixedCase fc{make_context(w), {}};
  fc.inst.operands = {{"M", m},           {"F", m},  {"K", CMatrix(m.transpose())}, {"T1", m},
                      {"T2", CMatrix(m * m)}, {"S1", CMatrix(m.transpose())}, {"S2", m}};
  CVector a(3), b(3), e(3);
  a << 1, cplx(0, 1), 2;
  b << 2, -1, cplx(1, 1);
  e << 1, 1, 0;
  e /= std::sqrt(6.0);
  fc.inst.operands["a"] = a;
  fc.inst.operands["b"] = b;
  fc.inst.operands["e"] = e;
  return fc;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("inequalities") {
  TEST_CASE("registry contents") {
    const auto& reg = registry();
    CHECK(reg.size() == 36);
    std::set<std::string> ids;
    for (const auto& e : reg) {
      ids.insert(e.id);
      CHECK_FALSE(e.statement.empty());
    }
    CHECK(ids.size() == reg.size());
    CHECK(registry_ids(Family::vector).size() == 9);
    CHECK(registry_ids(Family::matrix).size() == 12);
    CHECK(registry_ids(Family::single).size() == 6);
    CHECK(registry_ids(Family::product).size() == 5);
    CHECK(code_of([] { registry_entry("no_such_id"); }) == ErrorCode::UnknownId);
  }

  TEST_CASE("parameter domain validation") {
    BoundParams p;
    p.alpha = 0.0;
    CHECK(code_of([&] { validate_params(registry_entry("moby_a1"), p); }) == ErrorCode::DomainViolation);
    p = {};
    p.beta = -0.1;
    CHECK(code_of([&] { validate_params(registry_entry("moby_a1"), p); }) == ErrorCode::DomainViolation);
    p = {};
    p.r = 0.5;
    CHECK(code_of([&] { validate_params(registry_entry("ramadan1"), p); }) == ErrorCode::DomainViolation);
    CHECK_NOTHROW(validate_params(registry_entry("holder_mccarthy"), p));
    p = {};
    p.mu = 1.5;
    CHECK(code_of([&] { validate_params(registry_entry("modified_kz"), p); }) == ErrorCode::DomainViolation);
    p = {};
    p.p = 3.0;
    p.q = 3.0;
    CHECK(code_of([&] { validate_params(registry_entry("thm_2_16"), p); }) == ErrorCode::DomainViolation);
    p = {};
    p.lam = -0.1;
    CHECK(code_of([&] { validate_params(registry_entry("thm_2_7"), p); }) == ErrorCode::DomainViolation);
  }

  TEST_CASE("Buzano constants at alpha = 2, beta = 1") {
    const auto k = detail::buzano_constants(cplx(2.0, 0.0), 1.0);
    CHECK(k.delta1 == 0.75);
    CHECK(k.delta2 == 0.25);
  }

  TEST_CASE("diagonal-weight oracles") {
    // w = 3/2; X# = X and Y# = Y; X^2 + Y^2 = 5 I; XY = YX = 2 I.
    const SemiInnerContext ctx = diagonal_context();
    const Instance in = diagonal_instance();
    struct Want {
      const char* id;
      double lhs;
      double rhs;
    };
    const Want wants[] = {{"thm_2_7", 1.5, 2.0},        {"thm_2_8", 1.5, 2.0},       {"thm_2_10", 1.5, 1.5},
                          {"cor_2_11", 1.5, 1.5},       {"rem_2_12", 1.5, 1.5},      {"moby_a1", 5.0625, 5.6875},
                          {"ramadan1", 5.0625, 5.46875}, {"thm_beta", 5.0625, 5.6875}, {"thm_alpha", 2.25, 2.25},
                          {"thm_2_16", 5.0625, 1.3671875}, {"kz", 90.124956657399395, 160.0},
                          {"modified_kz", 90.124956657399395, 178.0}};
    for (const auto& w : wants) {
      CAPTURE(w.id);
      const BoundReport r = evaluate(ctx, w.id, in);
      CHECK(r.lhs == doctest::Approx(w.lhs).epsilon(1e-9));
      CHECK(r.rhs == doctest::Approx(w.rhs).epsilon(1e-9));
      CHECK(r.hypotheses_ok);
      CHECK(r.slack == doctest::Approx(r.rhs - r.lhs).epsilon(1e-12));
    }
  }

  TEST_CASE("frozen values on a rank-two weight") {
    FixedCase fc = fixed_rank_two_case();
    const std::map<std::string, std::pair<double, double>> frozen{
        {"moby_a2", {6.4927406227263393, 8.6423308300241963}},
        {"ramadan1_cor", {6.4927406227263393, 8.0358807344963807}},
        {"mohd1", {6.4927406227263393, 8.6423308300241715}},
        {"alpha_cor", {2.5480856780584005, 2.6709347851645964}},
        {"college1", {6.4927406227263393, 8.3142049989413511}},
        {"modified_kz_cor", {6.4927406227263393, 9.3924737408417158}},
        {"prod1", {449.59708044905489, 7500.0165840577683}},
        {"prod2", {449.59708044905489, 10750.94338687231}},
        {"cor_prod", {449.59708044905489, 7500.0165840577683}},
        {"cor_prod_a", {449.59708044905489, 10750.94338687231}},
        {"power_2r", {21.203704403925624, 118.44707942881007}},
        {"buz_general", {2.1213203435596424, 3.9494897427831779}},
        {"buz_half", {2.1213203435596424, 3.9494897427831779}},
        {"mix_al_be", {4.4999999999999991, 18.185586535436919}},
        {"buzano_beta", {4.4999999999999991, 18.185586535436919}},
        {"ramadan_kareem", {4.4999999999999991, 20.249999999999996}},
        {"buz_beta", {4.4999999999999991, 20.249999999999996}},
        {"buz_beta_pow", {4.4999999999999991, 20.249999999999996}},
        {"modified_buzano", {4.4999999999999991, 18.185586535436915}},
        {"drag", {4.4999999999999991, 8.3666002653407539}}};
    for (const auto& [id, want] : frozen) {
      CAPTURE(id);
      const BoundReport r = evaluate(fc.ctx, id, fc.inst);
      CHECK(r.lhs == doctest::Approx(want.first).epsilon(1e-9));
      CHECK(r.rhs == doctest::Approx(want.second).epsilon(1e-9));
    }
  }

  TEST_CASE("rank-one weight: moby_a1 holds but is advisory") {
    const SemiInnerContext ctx = make_context(CMatrix::Ones(2, 2));
    Instance in;
    in.operands = {{"X", mat2(2, 1, -1, 2)}, {"Y", mat2(2, 3, 1, -1)}};
    in.params.alpha = 2.0;
    in.params.beta = 1.0;
    const BoundReport r = evaluate(ctx, "moby_a1", in);
    CHECK(r.lhs == doctest::Approx(25.62890625).epsilon(1e-9));
    CHECK(r.rhs == doctest::Approx(27.26171875).epsilon(1e-9));
    CHECK(r.slack >= 0.0);
    CHECK_FALSE(r.hypotheses_ok);
    CHECK(r.intermediates.at("w_xy") == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(r.intermediates.at("w_yx") == doctest::Approx(5.5).epsilon(1e-9));
    CHECK(r.intermediates.at("norm_first") == doctest::Approx(10.25).epsilon(1e-12));
  }

  TEST_CASE("kz scalar counterexample is detected") {
    // F = K = X = Y = 1, alpha = 2, beta = 0: w^4 = 16 while the stated right side is 14.
    const CMatrix one = CMatrix::Identity(1, 1);
    const SemiInnerContext ctx = make_context(one);
    Instance in;
    in.operands = {{"F", one}, {"X", one}, {"Y", one}, {"K", one}};
    in.params.alpha = 2.0;
    in.params.beta = 0.0;
    const BoundReport r = evaluate(ctx, "kz", in);
    CHECK(r.lhs == doctest::Approx(16.0).epsilon(1e-9));
    CHECK(r.rhs == doctest::Approx(14.0).epsilon(1e-9));
    CHECK(r.violated());
    CHECK(r.intermediates.at("audit_rhs_proof_form") >= r.lhs);
  }

  TEST_CASE("college1 scalar counterexample is detected") {
    const CMatrix one = CMatrix::Identity(1, 1);
    const SemiInnerContext ctx = make_context(one);
    Instance in;
    in.operands = {{"M", one}};
    in.params.alpha = 2.0;
    in.params.beta = 0.0;
    const BoundReport r = evaluate(ctx, "college1", in);
    CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.rhs == doctest::Approx(14.0 / 16.0).epsilon(1e-9));
    CHECK(r.violated());
    CHECK(r.intermediates.at("audit_rhs_proof_form") >= r.lhs);
  }

  TEST_CASE("thm_2_8 counterexample from the control example") {
    const SemiInnerContext ctx = make_context(mat2(2, 0, 0, 1));
    Instance in;
    in.operands = {{"X", mat2(1, 0.5, 0, 1)}, {"Y", mat2(1, 0, 0.5, 1)}};
    in.params.lam = 0.0;
    const BoundReport r = evaluate(ctx, "thm_2_8", in);
    CHECK(r.hypotheses_ok);
    CHECK(r.violated());
    CHECK(r.intermediates.at("lam_star") == 0.0);
  }

  TEST_CASE("thm_2_16 fails on the diagonal example while its proof form holds") {
    const BoundReport r = evaluate(diagonal_context(), "thm_2_16", diagonal_instance());
    CHECK(r.violated());
    CHECK(r.intermediates.at("audit_rhs_proof_form") >= r.lhs);
  }

  TEST_CASE("zero operators give zero slack") {
    const SemiInnerContext ctx = diagonal_context();
    const CMatrix z = CMatrix::Zero(2, 2);
    Instance in;
    in.operands = {{"X", z}, {"Y", z}, {"F", z}, {"K", z}, {"M", z}, {"T1", z}, {"T2", z}, {"S1", z}, {"S2", z}};
    for (Family f : {Family::matrix, Family::single, Family::product}) {
      for (const auto& id : registry_ids(f)) {
        CAPTURE(id);
        const BoundReport r = evaluate(ctx, id, in);
        CHECK(r.lhs == 0.0);
        CHECK(r.slack == doctest::Approx(0.0));
        CHECK_FALSE(r.violated());
      }
    }
  }

  TEST_CASE("scalar lemmas") {
    BoundParams p;
    p.lam = 0.25;
    p.r = 2.0;
    const auto links = check_scalar_lemma("jensen", {1.0, 4.0}, p);
    REQUIRE(links.size() == 2);
    // 1^(1/4) 4^(3/4) <= 1/4 + 3 <= (1/4 + 3 * 16 / 4)^(1/2)
    CHECK(links[0].lhs == doctest::Approx(std::pow(4.0, 0.75)).epsilon(1e-12));
    CHECK(links[0].rhs == doctest::Approx(3.25).epsilon(1e-12));
    for (const auto& l : links) CHECK(l.slack >= 0.0);
    const auto bohr = check_scalar_lemma("bohr", {1.0, 2.0, 3.0}, p);
    REQUIRE(bohr.size() == 1);
    CHECK(bohr[0].lhs == doctest::Approx(36.0).epsilon(1e-12));
    CHECK(bohr[0].rhs == doctest::Approx(42.0).epsilon(1e-12));
    CHECK(code_of([&] { check_scalar_lemma("bohr", {1.0, -2.0}, p); }) == ErrorCode::DomainViolation);
  }

  TEST_CASE("vector lemma preconditions and equality case") {
    const SemiInnerContext ctx = diagonal_context();
    CVector a(2), e(2);
    a << 1.0, cplx(0.0, 1.0);
    e << 3.0, 0.0;
    CHECK(code_of([&] { check_vector_lemma(ctx, "buz_half", a, a, e, {}); }) == ErrorCode::NotUnitVector);
    const CVector unit = a / vec_seminorm(ctx, a);
    const BoundReport r = check_vector_lemma(ctx, "buz_half", a, a, unit, {});
    CHECK(std::abs(r.slack) < 1e-12);
  }

  TEST_CASE("mixed Schwarz and Hoelder-McCarthy") {
    auto rng = rng_for(30);
    for (int trial = 0; trial < 50; ++trial) {
      const RandomCase com = random_case(rng, TKind::a_commuting);
      const int n = int(com.ctx.dim());
      const BoundReport ms = check_mixed_schwarz(com.ctx, com.t, random_vector(rng, n), random_vector(rng, n), 0.3);
      CHECK(ms.hypotheses_ok);
      CHECK_FALSE(ms.violated());
      const RandomCase pos = random_case(rng, TKind::a_positive);
      CVector x = random_vector(rng, int(pos.ctx.dim()));
      if (vec_seminorm(pos.ctx, x) < 1e-8) continue;
      x /= vec_seminorm(pos.ctx, x);
      for (double r : {0.3, 1.0, 2.5}) CHECK_FALSE(check_holder_mccarthy(pos.ctx, pos.t, x, r).violated());
    }
    const SemiInnerContext ctx = make_context(CMatrix::Identity(2, 2));
    CVector x(2);
    x << 1.0, 0.0;
    CHECK(code_of([&] { check_holder_mccarthy(ctx, mat2(-1, 0, 0, 1), x, 2.0); }) == ErrorCode::NotAPositive);
    CHECK(code_of([&] { check_holder_mccarthy(ctx, mat2(1, 0, 0, 1), CVector(2 * x), 2.0); }) ==
          ErrorCode::NotUnitVector);
  }

  TEST_CASE("special cases agree") {
    auto rng = rng_for(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
      const RandomCase rc = random_case(rng);
      Instance in;
      in.operands = {{"X", rc.t}, {"Y", gen_operator(rng, rc.ctx, TKind::dense, 1.0)}};
      in.params.r = 1.0 + 2.0 * u(rng);
      in.params.lam = u(rng);
      const BoundReport a = evaluate(rc.ctx, "cor_2_11", in);
      const BoundReport b = evaluate(rc.ctx, "thm_2_10", in);
      CHECK(std::abs(a.rhs - b.rhs) <= 1e-10 * std::max(1.0, b.rhs));

      Instance single;
      single.operands = {{"M", rc.t}};
      single.params.alpha = cplx(2.0 * u(rng) + 0.2, u(rng) - 0.5);
      single.params.beta = 3.0 * u(rng);
      const BoundReport c1 = evaluate(rc.ctx, "college1", single);
      Instance full = single;
      full.operands = {{"F", rc.t}, {"X", rc.t}, {"Y", rc.t}, {"K", rc.t}};
      const BoundReport kz = evaluate(rc.ctx, "kz", full);
      CHECK(std::abs(kz.lhs / 16.0 - c1.lhs) <= 1e-9 * std::max(1.0, c1.lhs));
      CHECK(std::abs(kz.rhs / 16.0 - c1.rhs) <= 1e-9 * std::max(1.0, c1.rhs));

      const int n = int(rc.ctx.dim());
      CVector av = random_vector(rng, n);
      CVector bv = random_vector(rng, n);
      CVector ev = random_vector(rng, n);
      if (vec_seminorm(rc.ctx, ev) < 1e-6) continue;
      ev /= vec_seminorm(rc.ctx, ev);
      BoundParams p;
      p.alpha = 2.0;
      p.beta = 3.0 * u(rng);
      CHECK(std::abs(check_vector_lemma(rc.ctx, "mix_al_be", av, bv, ev, p).rhs -
                     check_vector_lemma(rc.ctx, "buzano_beta", av, bv, ev, p).rhs) <= 1e-12 * (1.0 + av.squaredNorm() * bv.squaredNorm()));
      CHECK(std::abs(check_vector_lemma(rc.ctx, "buz_beta", av, bv, ev, p).rhs -
                     check_vector_lemma(rc.ctx, "ramadan_kareem", av, bv, ev, p).rhs) <= 1e-12 * (1.0 + av.squaredNorm() * bv.squaredNorm()));
    }
  }

  TEST_CASE("beta-monotone right sides are non-decreasing in beta") {
    auto rng = rng_for(33);
    for (int trial = 0; trial < 30; ++trial) {
      const RandomCase rc = random_case(rng);
      Instance in;
      in.operands = {{"M", rc.t}};
      for (const char* id : {"mohd1", "moby_a2", "ramadan1_cor"}) {
        CAPTURE(id);
        REQUIRE(registry_entry(id).beta_monotone);
        double prev = -1.0;
        for (int i = 0; i <= 10; ++i) {
          in.params.beta = i;
          const BoundReport r = evaluate(rc.ctx, id, in);
          CHECK(r.rhs >= prev - 1e-12 * std::max(1.0, r.rhs));
          prev = r.rhs;
          if (std::string(id) == "mohd1") CHECK(r.rhs <= r.intermediates.at("rhs_beta_limit") * (1.0 + 1e-12) + 1e-12);
        }
      }
    }
  }

  TEST_CASE("A = I and equal operands make prod1 and prod2 sharp") {
    auto rng = rng_for(32);
    const SemiInnerContext ctx = make_context(CMatrix::Identity(3, 3));
    const CMatrix m = random_matrix(rng, 3);
    Instance in;
    in.operands = {{"T1", m}, {"T2", m}, {"S1", m}, {"S2", m}};
    for (const char* id : {"prod1", "prod2"}) {
      const BoundReport r = evaluate(ctx, id, in);
      CHECK(std::abs(r.rel_slack) < 1e-8);
    }
  }

  TEST_CASE("missing or misshapen operands") {
    const SemiInnerContext ctx = diagonal_context();
    Instance in;
    in.operands = {{"X", mat2(1, 0, 0, 1)}};
    CHECK(code_of([&] { evaluate(ctx, "thm_2_8", in); }) == ErrorCode::DomainViolation);
    in.operands["Y"] = CMatrix::Identity(3, 3);
    CHECK(code_of([&] { evaluate(ctx, "thm_2_8", in); }) == ErrorCode::DimensionMismatch);
  }
}
