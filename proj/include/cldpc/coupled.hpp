#pragma once

#include <cstdint>
#include <vector>

#include "cldpc/exponent_matrix.hpp"
#include "cldpc/tanner.hpp"

namespace cldpc {

// Time-invariant SC-LDPC convolutional code described by a c x a exponent
// matrix of monomial degrees. The base is normalized so its smallest entry
// is 0 (a pure time shift), making the memory order the largest entry.
class ConvolutionalCode {
 public:
  explicit ConvolutionalCode(ExponentMatrix base);

  const ExponentMatrix& base() const { return base_; }
  int check_count() const { return base_.rows(); }   // c
  int symbol_count() const { return base_.cols(); }  // a

  std::int64_t memory_order() const { return base_.max_entry(); }   // m_h
  std::int64_t constraint_length() const {                          // v_s
    return (memory_order() + 1) * symbol_count();
  }
  double rate() const {  // asymptotic (a - c) / a
    return static_cast<double>(symbol_count() - check_count()) / symbol_count();
  }

 private:
  ExponentMatrix base_;
};

// c x a grid of monomial degree sets; singletons for monomial codes. Sets are
// kept sorted.
struct SymbolicMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::int64_t>> degrees;  // row-major cells

  const std::vector<std::int64_t>& at(int i, int j) const {
    return degrees[static_cast<std::size_t>(i) * cols + j];
  }
};

SymbolicMatrix to_symbolic(const ExponentMatrix& m);

// H_0 .. H_{m_h}: H_m[i][j] = 1 iff p_ij = m. Stacking them per the
// semi-infinite band reproduces the convolutional parity-check matrix.
using BinaryBlock = std::vector<std::vector<std::uint8_t>>;
std::vector<BinaryBlock> band_blocks(const ConvolutionalCode& code);

// W x W block submatrix of the semi-infinite matrix covering block rows and
// columns t .. t+W-1 of a chain of chain_len block positions.
struct WindowMatrix {
  ParityCheckMatrix h;
  std::int64_t position = 0;     // t
  std::int64_t blocks = 0;       // W
  int target_cols = 0;           // first a columns are the output block
  std::vector<std::uint8_t> row_references_past;  // per window row
};

WindowMatrix window_matrix(const ConvolutionalCode& code, std::int64_t window_blocks,
                           std::int64_t position, std::int64_t chain_len);

// Reinterprets a finite-lifting exponent matrix as a convolutional code.
ConvolutionalCode unwrap_qc(const ExponentMatrix& m);

// Searches row and column offsets (which preserve every cycle sum) that
// shrink max-min. Coordinate descent, rows first then columns, repeated to
// fixpoint; max_sweeps caps the number of passes.
ConvolutionalCode reduce_memory(const ConvolutionalCode& code, int max_sweeps = 32);

}  // namespace cldpc
