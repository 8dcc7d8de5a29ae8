#include "cldpc/gf2.hpp"

#include <stdexcept>

namespace cldpc {

BitMatrix::BitMatrix(std::int64_t r, std::int64_t c)
    : rows(r), cols(c), words_per_row(static_cast<std::size_t>((c + 63) / 64)),
      bits(static_cast<std::size_t>(r) * words_per_row, 0) {}

bool BitMatrix::get(std::int64_t r, std::int64_t c) const {
  return (bits[static_cast<std::size_t>(r) * words_per_row + static_cast<std::size_t>(c >> 6)] >>
          (c & 63)) & 1u;
}

void BitMatrix::set(std::int64_t r, std::int64_t c, bool v) {
  std::uint64_t& w =
      bits[static_cast<std::size_t>(r) * words_per_row + static_cast<std::size_t>(c >> 6)];
  const std::uint64_t mask = std::uint64_t{1} << (c & 63);
  if (v) {
    w |= mask;
  } else {
    w &= ~mask;
  }
}

void BitMatrix::xor_rows(std::int64_t dst, std::int64_t src) {
  std::uint64_t* d = bits.data() + static_cast<std::size_t>(dst) * words_per_row;
  const std::uint64_t* s = bits.data() + static_cast<std::size_t>(src) * words_per_row;
  for (std::size_t w = 0; w < words_per_row; ++w) d[w] ^= s[w];
}

BitMatrix to_bitmatrix(const ParityCheckMatrix& h) {
  BitMatrix m(h.rows, h.cols);
  for (std::int64_t r = 0; r < h.rows; ++r) {
    for (std::int32_t c : h.row_support[static_cast<std::size_t>(r)]) m.set(r, c, true);
  }
  return m;
}

namespace {

// Row echelon reduction; returns pivot column per pivot row, rows permuted in
// place so pivot row i is row i. full=true additionally clears above pivots.
std::vector<std::int32_t> eliminate(BitMatrix& m, bool full) {
  std::vector<std::int32_t> pivots;
  std::int64_t row = 0;
  for (std::int64_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::int64_t sel = -1;
    for (std::int64_t r = row; r < m.rows; ++r) {
      if (m.get(r, col)) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (std::size_t w = 0; w < m.words_per_row; ++w) {
        std::swap(m.bits[static_cast<std::size_t>(sel) * m.words_per_row + w],
                  m.bits[static_cast<std::size_t>(row) * m.words_per_row + w]);
      }
    }
    const std::int64_t lo = full ? 0 : row + 1;
    for (std::int64_t r = lo; r < m.rows; ++r) {
      if (r != row && m.get(r, col)) m.xor_rows(r, row);
    }
    pivots.push_back(static_cast<std::int32_t>(col));
    ++row;
  }
  return pivots;
}

}  // namespace

std::int64_t gf2_rank(BitMatrix m) {
  return static_cast<std::int64_t>(eliminate(m, false).size());
}

std::int64_t gf2_rank(const ParityCheckMatrix& h) { return gf2_rank(to_bitmatrix(h)); }

EncoderPlan build_encoder(const ParityCheckMatrix& h) {
  BitMatrix m = to_bitmatrix(h);
  std::vector<std::int32_t> pivots = eliminate(m, true);

  EncoderPlan plan;
  plan.n = h.cols;
  plan.k = h.cols - static_cast<std::int64_t>(pivots.size());
  plan.pivot_cols = pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(h.cols), false);
  for (std::int32_t c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::int32_t> free_index(static_cast<std::size_t>(h.cols), -1);
  for (std::int64_t c = 0; c < h.cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      free_index[static_cast<std::size_t>(c)] = static_cast<std::int32_t>(plan.free_cols.size());
      plan.free_cols.push_back(static_cast<std::int32_t>(c));
    }
  }
  plan.pivot_terms.resize(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::int64_t c = 0; c < m.cols; ++c) {
      if (c != pivots[i] && m.get(static_cast<std::int64_t>(i), c)) {
        // after full reduction only free columns remain beside the pivot
        plan.pivot_terms[i].push_back(free_index[static_cast<std::size_t>(c)]);
      }
    }
  }
  return plan;
}

std::vector<std::uint8_t> encode(const EncoderPlan& plan, std::span<const std::uint8_t> message) {
  if (static_cast<std::int64_t>(message.size()) != plan.k) {
    throw std::invalid_argument("message length must equal the code dimension");
  }
  std::vector<std::uint8_t> word(static_cast<std::size_t>(plan.n), 0);
  for (std::size_t i = 0; i < plan.free_cols.size(); ++i) {
    word[static_cast<std::size_t>(plan.free_cols[i])] = message[i] & 1;
  }
  for (std::size_t i = 0; i < plan.pivot_cols.size(); ++i) {
    std::uint8_t acc = 0;
    for (std::int32_t t : plan.pivot_terms[i]) acc ^= message[static_cast<std::size_t>(t)] & 1;
    word[static_cast<std::size_t>(plan.pivot_cols[i])] = acc;
  }
  return word;
}

bool syndrome_is_zero(const ParityCheckMatrix& h, std::span<const std::uint8_t> word) {
  if (static_cast<std::int64_t>(word.size()) != h.cols) {
    throw std::invalid_argument("word length must equal the code length");
  }
  for (const auto& sup : h.row_support) {
    std::uint8_t acc = 0;
    for (std::int32_t c : sup) acc ^= word[static_cast<std::size_t>(c)] & 1;
    if (acc) return false;
  }
  return true;
}

}  // namespace cldpc
