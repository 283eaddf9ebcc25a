#pragma once

#include <vector>

#include "semihilb/context.hpp"

namespace semihilb {

/// Weight diag(A, ..., A) with k copies; factors and rank are block-diagonal.
SemiInnerContext dsum_context(const SemiInnerContext& ctx, int k);

enum class BlockKind { antidiag, diag, full, symmetric };

/// A 2x2 operator matrix over an n-dimensional space.
/// antidiag: [[0, X], [Y, 0]]  (blocks = {X, Y})
/// diag:     [[X, 0], [0, Y]]  (blocks = {X, Y})
/// full:     [[F, X], [Y, K]]  (blocks = {F, X, Y, K})
/// symmetric: [[X, Y], [Y, X]] (blocks = {X, Y})
struct BlockSpec {
  BlockKind kind = BlockKind::antidiag;
  std::vector<CMatrix> blocks;

  static BlockSpec antidiag(const CMatrix& x, const CMatrix& y) { return {BlockKind::antidiag, {x, y}}; }
  static BlockSpec diag(const CMatrix& x, const CMatrix& y) { return {BlockKind::diag, {x, y}}; }
  static BlockSpec full(const CMatrix& f, const CMatrix& x, const CMatrix& y, const CMatrix& k) {
    return {BlockKind::full, {f, x, y, k}};
  }
  static BlockSpec symmetric(const CMatrix& x, const CMatrix& y) { return {BlockKind::symmetric, {x, y}}; }
};

CMatrix assemble(const BlockSpec& spec);

/// Block (i, j) of a 2n x 2n matrix.
CMatrix block_of(const CMatrix& m, int i, int j);

}  // namespace semihilb
