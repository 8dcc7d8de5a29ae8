#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cldpc/exponent_matrix.hpp"

namespace cldpc {

// Sparse binary parity-check matrix, stored as sorted column support per row.
struct ParityCheckMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::vector<std::int32_t>> row_support;

  // set when produced by expand_block; block/shift of a 1-position follow
  // arithmetically from these
  struct QcOrigin {
    int m = 0;
    int n = 0;
    std::int64_t N = 0;
  };
  std::optional<QcOrigin> qc;

  std::int64_t ones() const;
  bool get(std::int64_t r, std::int64_t c) const;
  std::vector<std::vector<std::int32_t>> col_support() const;
};

// Source block of a 1-position in a QC expansion.
struct BlockRef {
  int block_row = 0;
  int block_col = 0;
  std::int64_t shift = 0;
};
BlockRef qc_block_of(const ParityCheckMatrix& h, std::int64_t r, std::int64_t c);

// (mN) x (nN) binary expansion: block (i,j) is the identity with every row
// cyclically shifted right by p_ij positions.
ParityCheckMatrix expand_block(const ExponentMatrix& m);

// Exact Tanner-graph girth by BFS from every variable node, truncated at cap.
// Returns 0 for "greater than cap". Independent of the exponent-sum path.
int tanner_girth(const ParityCheckMatrix& h, int cap = 12);

}  // namespace cldpc
