#include "cldpc/cycles.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace cldpc {

namespace {

constexpr int kMaxHalfLen = 6;  // cycle length cap 12

void check_even_cap(int cap, const char* what) {
  if (cap < 4 || cap > 2 * kMaxHalfLen || cap % 2 != 0) {
    throw std::invalid_argument(std::string(what) + " must be even and in [4, 12]");
  }
}

// Depth-first walk over alternating column/row index sequences. The walk
// fixes cols[0] and extends (row_i, col_{i+1}) pairs; adjacency constraints
// are enforced at choice time, closure constraints against position 0 at the
// last step.
struct CycleSearch {
  const std::int64_t* p = nullptr;
  int stride = 0;
  int m = 0;
  int n = 0;
  int k = 0;
  std::int64_t mod = 0;          // 0: exact integer (strictly avoidable) test
  std::int64_t span = 0;         // max-min entry, for exact-test pruning
  bool min_col_start = false;    // restrict cols[i] >= cols[0] (dedup rotations)
  std::array<int, kMaxHalfLen> cols{};
  std::array<int, kMaxHalfLen> rows{};

  const std::int64_t* row_ptr(int r) const { return p + static_cast<std::size_t>(r) * stride; }

  bool divisible(std::int64_t s) const { return mod ? (s % mod == 0) : (s == 0); }

  // Existence search; returns true as soon as a qualifying closure is found.
  bool find(int i, std::int64_t sum) {
    const int ci = cols[i];
    const int prev_row = i > 0 ? rows[i - 1] : -1;
    if (i == k - 1) {
      const int c0 = cols[0];
      for (int r = 0; r < m; ++r) {
        if (r == prev_row || r == rows[0]) continue;
        const std::int64_t s = sum + row_ptr(r)[ci] - row_ptr(r)[c0];
        if (divisible(s)) {
          rows[i] = r;
          return true;
        }
      }
      return false;
    }
    const std::int64_t remaining_bound = mod ? 0 : static_cast<std::int64_t>(k - 1 - i) * span;
    for (int r = 0; r < m; ++r) {
      if (r == prev_row) continue;
      const std::int64_t* pr = row_ptr(r);
      const std::int64_t base = pr[ci];
      rows[i] = r;
      for (int c2 = 0; c2 < n; ++c2) {
        if (c2 == ci) continue;
        if (i == k - 2 && c2 == cols[0]) continue;
        if (min_col_start && c2 < cols[0]) continue;
        const std::int64_t s = sum + base - pr[c2];
        if (!mod && std::abs(s) > remaining_bound) continue;
        cols[i + 1] = c2;
        if (find(i + 1, s)) return true;
      }
    }
    return false;
  }

  // Full enumeration; calls sink for every qualifying closure (all residues).
  void walk(int i, std::int64_t sum, const std::function<void(std::int64_t)>& sink) {
    const int ci = cols[i];
    const int prev_row = i > 0 ? rows[i - 1] : -1;
    if (i == k - 1) {
      const int c0 = cols[0];
      for (int r = 0; r < m; ++r) {
        if (r == prev_row || r == rows[0]) continue;
        rows[i] = r;
        sink(sum + row_ptr(r)[ci] - row_ptr(r)[c0]);
      }
      return;
    }
    for (int r = 0; r < m; ++r) {
      if (r == prev_row) continue;
      const std::int64_t* pr = row_ptr(r);
      const std::int64_t base = pr[ci];
      rows[i] = r;
      for (int c2 = 0; c2 < n; ++c2) {
        if (c2 == ci) continue;
        if (i == k - 2 && c2 == cols[0]) continue;
        if (min_col_start && c2 < cols[0]) continue;
        cols[i + 1] = c2;
        walk(i + 1, sum + base - pr[c2], sink);
      }
    }
  }
};

// Lexicographically smallest interleaved (col, row) sequence over all pair
// rotations and the reflected traversal.
std::vector<int> canonical_key(const std::vector<int>& cols, const std::vector<int>& rows) {
  const int k = static_cast<int>(cols.size());
  std::vector<int> best;
  std::vector<int> cur(2 * static_cast<std::size_t>(k));
  for (int rot = 0; rot < k; ++rot) {
    for (int t = 0; t < k; ++t) {
      cur[2 * t] = cols[(rot + t) % k];
      cur[2 * t + 1] = rows[(rot + t) % k];
    }
    if (best.empty() || cur < best) best = cur;
    // reflected traversal starting at the same column
    for (int t = 0; t < k; ++t) {
      cur[2 * t] = cols[((rot - t) % k + k) % k];
      cur[2 * t + 1] = rows[((rot - t - 1) % k + k) % k];
    }
    if (cur < best) best = cur;
  }
  return best;
}

std::int64_t candidate_sum(const ExponentMatrix& m, const std::vector<int>& cols,
                           const std::vector<int>& rows) {
  const int k = static_cast<int>(cols.size());
  std::int64_t s = 0;
  for (int t = 0; t < k; ++t) {
    s += m.at(rows[t], cols[t]) - m.at(rows[t], cols[(t + 1) % k]);
  }
  return s;
}

}  // namespace

CycleWitness classify_candidate(CycleCandidate candidate, std::int64_t lifting) {
  CycleWitness w;
  const std::int64_t sum = candidate.sum;
  w.candidate = std::move(candidate);
  if (sum == 0) {
    w.classification = CycleClass::strictly_avoidable;
    w.present = true;
    return w;
  }
  if (lifting != kUnboundedLifting && sum % lifting == 0) {
    w.classification = CycleClass::avoidable;
    w.beta = std::abs(sum) / lifting;
    w.present = true;
    return w;
  }
  w.classification = CycleClass::absent;
  return w;
}

namespace detail {

bool exists_present_cycle_raw(const std::int64_t* p, int stride, int m, int n, int k,
                              std::int64_t mod, std::int64_t span, int required_col,
                              CycleCandidate* witness) {
  if (k < 2 || k > kMaxHalfLen) {
    throw std::invalid_argument("cycle half-length must be in [2, 6]");
  }
  CycleSearch s;
  s.p = p;
  s.stride = stride;
  s.m = m;
  s.n = n;
  s.k = k;
  s.mod = mod;
  s.span = span;

  bool found = false;
  if (required_col >= 0) {
    if (required_col >= n) throw std::invalid_argument("required column out of range");
    s.min_col_start = false;
    s.cols[0] = required_col;
    found = s.find(0, 0);
  } else {
    s.min_col_start = true;
    for (int c0 = 0; c0 < n && !found; ++c0) {
      s.cols[0] = c0;
      found = s.find(0, 0);
    }
  }
  if (found && witness) {
    witness->cols.assign(s.cols.begin(), s.cols.begin() + k);
    witness->rows.assign(s.rows.begin(), s.rows.begin() + k);
    std::int64_t sum = 0;
    for (int t = 0; t < k; ++t) {
      const std::int64_t* pr = p + static_cast<std::size_t>(witness->rows[t]) * stride;
      sum += pr[witness->cols[t]] - pr[witness->cols[(t + 1) % k]];
    }
    witness->sum = sum;
  }
  return found;
}

bool exists_present_cycle(const ExponentMatrix& m, int k, std::int64_t lifting,
                          int required_col, CycleCandidate* witness) {
  const std::int64_t span = lifting == kUnboundedLifting ? m.spread() : 0;
  return exists_present_cycle_raw(m.data(), m.cols(), m.rows(), m.cols(), k, lifting, span,
                                  required_col, witness);
}

}  // namespace detail

void visit_cycles(const ExponentMatrix& m, int max_len,
                  const std::function<void(const CycleWitness&)>& sink) {
  check_even_cap(max_len, "max cycle length");
  std::set<std::vector<int>> seen;
  for (int k = 2; k <= max_len / 2; ++k) {
    CycleSearch s;
    s.p = m.data();
    s.stride = m.cols();
    s.m = m.rows();
    s.n = m.cols();
    s.k = k;
    s.mod = 1;  // walk() ignores residues; any value keeps pruning off
    s.min_col_start = true;
    for (int c0 = 0; c0 < m.cols(); ++c0) {
      s.cols[0] = c0;
      s.walk(0, 0, [&](std::int64_t) {
        std::vector<int> cols(s.cols.begin(), s.cols.begin() + k);
        std::vector<int> rows(s.rows.begin(), s.rows.begin() + k);
        std::vector<int> key = canonical_key(cols, rows);
        if (!seen.insert(key).second) return;
        // report the canonical orientation so equal candidates compare equal
        CycleCandidate cand;
        cand.cols.resize(k);
        cand.rows.resize(k);
        for (int t = 0; t < k; ++t) {
          cand.cols[t] = key[2 * t];
          cand.rows[t] = key[2 * t + 1];
        }
        cand.sum = candidate_sum(m, cand.cols, cand.rows);
        sink(classify_candidate(std::move(cand), m.lifting()));
      });
    }
  }
}

std::vector<CycleWitness> enumerate_cycles(const ExponentMatrix& m, int max_len) {
  std::vector<CycleWitness> out;
  visit_cycles(m, max_len, [&](const CycleWitness& w) { out.push_back(w); });
  return out;
}

std::map<int, CycleTally> count_cycles_by_length(const ExponentMatrix& m, int max_len) {
  std::map<int, CycleTally> tally;
  visit_cycles(m, max_len, [&](const CycleWitness& w) {
    CycleTally& t = tally[w.candidate.length()];
    ++t.candidates;
    if (w.present) ++t.present;
  });
  return tally;
}

int girth(const ExponentMatrix& m, int cap) {
  check_even_cap(cap, "girth cap");
  for (int len = 4; len <= cap; len += 2) {
    if (detail::exists_present_cycle(m, len / 2, m.lifting())) return len;
  }
  return 0;
}

std::optional<CycleWitness> shortest_present_cycle(const ExponentMatrix& m, int cap) {
  check_even_cap(cap, "girth cap");
  for (int len = 4; len <= cap; len += 2) {
    CycleCandidate cand;
    if (detail::exists_present_cycle(m, len / 2, m.lifting(), -1, &cand)) {
      return classify_candidate(std::move(cand), m.lifting());
    }
  }
  return std::nullopt;
}

}  // namespace cldpc
