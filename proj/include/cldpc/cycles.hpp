#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "cldpc/exponent_matrix.hpp"

namespace cldpc {

// Closed alternating row/column path through the base matrix. cols and rows
// have equal length k (cycle length 2k); consecutive columns differ,
// consecutive rows differ, both cyclically. sum is the alternating shift sum
// sum_i (p[rows[i]][cols[i]] - p[rows[i]][cols[i+1]]) with cols[k] = cols[0].
struct CycleCandidate {
  std::vector<int> cols;
  std::vector<int> rows;
  std::int64_t sum = 0;

  int length() const { return 2 * static_cast<int>(cols.size()); }
};

enum class CycleClass {
  absent,              // sum not divisible: no cycle at this lifting
  avoidable,           // sum = beta*N with beta != 0: present at this N only
  strictly_avoidable,  // sum = 0: present at every lifting degree
};

struct CycleWitness {
  CycleCandidate candidate;
  CycleClass classification = CycleClass::absent;
  std::int64_t beta = 0;  // |sum| / N when avoidable
  bool present = false;   // cycle exists at the matrix lifting
};

CycleWitness classify_candidate(CycleCandidate candidate, std::int64_t lifting);

// Visits every distinct cycle candidate of length 4..max_len, deduplicated up
// to rotation and reflection of the closed path. max_len must be even and in
// [4, 12]. Deterministic order.
void visit_cycles(const ExponentMatrix& m, int max_len,
                  const std::function<void(const CycleWitness&)>& sink);

std::vector<CycleWitness> enumerate_cycles(const ExponentMatrix& m, int max_len);

// Candidate and present-cycle counts per cycle length, for diagnostics.
struct CycleTally {
  std::int64_t candidates = 0;
  std::int64_t present = 0;
};
std::map<int, CycleTally> count_cycles_by_length(const ExponentMatrix& m, int max_len);

// Smallest cycle length <= cap present at the matrix lifting (modular sums
// for finite N, exact zero sums for the unbounded/convolutional reading).
// Returns 0 when every length up to cap is cycle-free ("greater than cap").
// cap must be even and in [4, 12].
int girth(const ExponentMatrix& m, int cap = 12);

// Same scan, returning the first offending cycle instead of its length.
std::optional<CycleWitness> shortest_present_cycle(const ExponentMatrix& m, int cap = 12);

namespace detail {

// Existence test for a present cycle of length exactly 2k. When required_col
// is >= 0 only cycles passing through that column are considered (used by the
// incremental SMC checks). Fills *witness with one qualifying candidate.
bool exists_present_cycle(const ExponentMatrix& m, int k, std::int64_t lifting,
                          int required_col = -1, CycleCandidate* witness = nullptr);

// Raw-buffer variant for search inner loops: p is row-major with the given
// stride, of which the first n columns are live. mod = 0 tests exact zero
// sums; span bounds |entries| differences for that case (pass 0 when mod>0).
bool exists_present_cycle_raw(const std::int64_t* p, int stride, int m, int n, int k,
                              std::int64_t mod, std::int64_t span, int required_col,
                              CycleCandidate* witness = nullptr);

}  // namespace detail

}  // namespace cldpc
