#pragma once

#include <cstdint>
#include <random>

#include "semihilb/fuzz.hpp"

namespace testing_support {

using namespace semihilb;

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + 17); }

inline CMatrix random_matrix(std::mt19937_64& rng, int n, int m = -1) {
  std::normal_distribution<double> g;
  CMatrix out(n, m < 0 ? n : m);
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index k = 0; k < out.cols(); ++k) out(i, k) = cplx(g(rng), g(rng));
  return out;
}

inline CVector random_vector(std::mt19937_64& rng, int n) { return random_matrix(rng, n, 1); }

inline AKind concrete_kind(std::mt19937_64& rng) {
  static constexpr AKind kinds[] = {AKind::identity, AKind::diagonal, AKind::dense_psd, AKind::rank_deficient};
  return kinds[std::uniform_int_distribution<int>(0, 3)(rng)];
}

/// Random weight of dimension 2..4 and an operator in B_A(H).
struct RandomCase {
  SemiInnerContext ctx;
  CMatrix t;
};

inline RandomCase random_case(std::mt19937_64& rng, TKind tk = TKind::dense) {
  const int n = std::uniform_int_distribution<int>(2, 4)(rng);
  const int rank = std::uniform_int_distribution<int>(1, n - 1)(rng);
  SemiInnerContext ctx = make_context(gen_weight(rng, concrete_kind(rng), n, rank, 1.0));
  if (ctx.rank == 0) ctx = make_context(CMatrix::Identity(n, n));
  CMatrix t = gen_operator(rng, ctx, tk, 1.0);
  return {std::move(ctx), std::move(t)};
}

inline CMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace testing_support
