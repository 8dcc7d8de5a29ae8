#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cldpc/exponent_matrix.hpp"

namespace cldpc {

enum class P1Strategy {
  first_found,  // stop the scan at the first success
  exhaustive,   // keep scanning and collect every success in the range
};

struct SmcSearchConfig {
  int rows = 3;
  int cols = 4;
  int target_girth = 10;  // one of {6, 8, 10, 12}
  std::int64_t n_min = 4;
  std::int64_t n_max = 64;
  P1Strategy p1_strategy = P1Strategy::first_found;
  std::uint64_t node_budget = 0;   // 0 = unlimited gamma-candidate checks
  double time_budget_s = 0.0;      // 0 = unlimited

  void validate() const;
};

struct SmcResult {
  std::int64_t N = 0;
  std::vector<std::int64_t> p1;      // seed column, p1[0]=0, p1[1]=1
  std::vector<std::int64_t> gammas;  // gamma_2 < ... < gamma_{n-1}
  ExponentMatrix matrix;
  int achieved_girth = 0;  // girth(matrix, 12); 0 means greater than 12
};

struct SmcSearchOutcome {
  std::optional<SmcResult> result;     // first success in scan order
  std::vector<SmcResult> all_results;  // every success (exhaustive mode)
  bool budget_exhausted = false;
  std::uint64_t nodes_used = 0;
  std::int64_t last_n_completed = 0;  // highest N fully scanned
};

// [ 0 | P1 | gamma_2*P1 | ... | gamma_{n-1}*P1 ] with entries reduced mod N.
ExponentMatrix assemble_smc(std::int64_t N, std::span<const std::int64_t> p1,
                            std::span<const std::int64_t> gammas);

// True iff the two-column seed [0 | P1] has no strictly avoidable cycle of
// length up to target_girth - 2.
bool seed_column_ok(std::span<const std::int64_t> p1, std::int64_t N, int target_girth);

// Smallest gamma_j in {gamma_{j-1}+1, ..., N-1} per column such that no cycle
// shorter than the target girth appears at lifting N. No backtracking: a
// column that exhausts its candidate set fails the whole (N, P1) attempt.
std::optional<std::vector<std::int64_t>> greedy_gamma_search(
    const SmcSearchConfig& config, std::int64_t N, std::span<const std::int64_t> p1);

// Ascending scan over N and, per N, lexicographic scan over seed columns.
SmcSearchOutcome find_min_lifting(const SmcSearchConfig& config);

}  // namespace cldpc
