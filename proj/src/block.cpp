#include "semihilb/block.hpp"

namespace semihilb {

namespace {

CMatrix repeat_diag(const CMatrix& m, int k) {
  const Eigen::Index n = m.rows();
  CMatrix out = CMatrix::Zero(n * k, n * k);
  for (int i = 0; i < k; ++i) out.block(i * n, i * n, n, n) = m;
  return out;
}

}  // namespace

SemiInnerContext dsum_context(const SemiInnerContext& ctx, int k) {
  if (k < 1) throw Error(ErrorCode::DomainViolation, "dsum_context: k must be >= 1");
  SemiInnerContext out;
  out.a = repeat_diag(ctx.a, k);
  out.a_pinv = repeat_diag(ctx.a_pinv, k);
  out.a_half = repeat_diag(ctx.a_half, k);
  out.a_half_pinv = repeat_diag(ctx.a_half_pinv, k);
  out.range_proj = repeat_diag(ctx.range_proj, k);
  out.rank = ctx.rank * k;
  out.rank_tol = ctx.rank_tol;
  return out;
}

CMatrix assemble(const BlockSpec& spec) {
  const std::size_t want = spec.kind == BlockKind::full ? 4 : 2;
  if (spec.blocks.size() != want) {
    throw Error(ErrorCode::DimensionMismatch, "assemble: wrong number of blocks");
  }
  const Eigen::Index n = spec.blocks[0].rows();
  for (const auto& b : spec.blocks) {
    if (b.rows() != n || b.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "assemble: blocks must share one square size");
    }
  }
  CMatrix out = CMatrix::Zero(2 * n, 2 * n);
  const auto& b = spec.blocks;
  switch (spec.kind) {
    case BlockKind::antidiag:
      out.topRightCorner(n, n) = b[0];
      out.bottomLeftCorner(n, n) = b[1];
      break;
    case BlockKind::diag:
      out.topLeftCorner(n, n) = b[0];
      out.bottomRightCorner(n, n) = b[1];
      break;
    case BlockKind::full:
      out.topLeftCorner(n, n) = b[0];
      out.topRightCorner(n, n) = b[1];
      out.bottomLeftCorner(n, n) = b[2];
      out.bottomRightCorner(n, n) = b[3];
      break;
    case BlockKind::symmetric:
      out.topLeftCorner(n, n) = b[0];
      out.topRightCorner(n, n) = b[1];
      out.bottomLeftCorner(n, n) = b[1];
      out.bottomRightCorner(n, n) = b[0];
      break;
  }
  return out;
}

CMatrix block_of(const CMatrix& m, int i, int j) {
  if (m.rows() != m.cols() || m.rows() % 2) {
    throw Error(ErrorCode::DimensionMismatch, "block_of: matrix is not 2n x 2n");
  }
  const Eigen::Index n = m.rows() / 2;
  return m.block(i * n, j * n, n, n);
}

}  // namespace semihilb
