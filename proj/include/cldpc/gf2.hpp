#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cldpc/tanner.hpp"

namespace cldpc {

// Dense bit matrix, 64 columns per word, row-major.
struct BitMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::size_t words_per_row = 0;
  std::vector<std::uint64_t> bits;

  BitMatrix() = default;
  BitMatrix(std::int64_t r, std::int64_t c);

  bool get(std::int64_t r, std::int64_t c) const;
  void set(std::int64_t r, std::int64_t c, bool v);
  void xor_rows(std::int64_t dst, std::int64_t src);
};

BitMatrix to_bitmatrix(const ParityCheckMatrix& h);

std::int64_t gf2_rank(BitMatrix m);
std::int64_t gf2_rank(const ParityCheckMatrix& h);

// Systematic-style encoder derived from the reduced row echelon form of H:
// message bits occupy the free columns, pivot columns are solved from them.
struct EncoderPlan {
  std::int64_t n = 0;  // codeword length
  std::int64_t k = 0;  // dimension = n - rank(H)
  std::vector<std::int32_t> pivot_cols;
  std::vector<std::int32_t> free_cols;
  // per pivot row, indices into free_cols whose message bits feed the pivot
  std::vector<std::vector<std::int32_t>> pivot_terms;
};

EncoderPlan build_encoder(const ParityCheckMatrix& h);
std::vector<std::uint8_t> encode(const EncoderPlan& plan, std::span<const std::uint8_t> message);

bool syndrome_is_zero(const ParityCheckMatrix& h, std::span<const std::uint8_t> word);

}  // namespace cldpc
