#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cldpc {

// Lifting value selecting the convolutional reading: entries are plain
// integer monomial degrees and no modular reduction is ever applied.
inline constexpr std::int64_t kUnboundedLifting = 0;

// Integer matrix of CPM shift exponents. For a finite lifting degree N every
// entry lies in [0, N). Immutable after construction; cheap to copy.
class ExponentMatrix {
 public:
  ExponentMatrix(int rows, int cols, std::vector<std::int64_t> entries,
                 std::int64_t lifting);

  static ExponentMatrix zeros(int rows, int cols, std::int64_t lifting);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t lifting() const { return lifting_; }
  bool is_finite() const { return lifting_ != kUnboundedLifting; }

  std::int64_t at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const std::int64_t* data() const { return entries_.data(); }
  std::span<const std::int64_t> entries() const { return entries_; }

  std::int64_t max_entry() const;
  std::int64_t min_entry() const;
  std::int64_t spread() const { return max_entry() - min_entry(); }

  ExponentMatrix with_entry(int i, int j, std::int64_t value) const;
  ExponentMatrix with_lifting(std::int64_t lifting) const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::int64_t lifting_;
  std::vector<std::int64_t> entries_;
};

// Text format: first line "m n N" with N a positive integer or the literal
// "inf"; then m lines of n space-separated non-negative integers. Lines
// starting with '#' are comments.
ExponentMatrix read_exponent_matrix(std::istream& in);
ExponentMatrix read_exponent_matrix_file(const std::string& path);
void write_exponent_matrix(const ExponentMatrix& m, std::ostream& out);
void write_exponent_matrix_file(const ExponentMatrix& m, const std::string& path);

}  // namespace cldpc
