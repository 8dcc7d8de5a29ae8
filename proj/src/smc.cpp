#include "cldpc/smc.hpp"

#include <chrono>
#include <stdexcept>

#include "cldpc/cycles.hpp"
#include "cldpc/errors.hpp"

namespace cldpc {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  std::uint64_t node_limit = 0;
  Clock::time_point deadline{};
  bool timed = false;
  std::uint64_t used = 0;
  bool exceeded = false;

  static Budget from_config(const SmcSearchConfig& c) {
    Budget b;
    b.node_limit = c.node_budget;
    if (c.time_budget_s > 0.0) {
      b.timed = true;
      b.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(c.time_budget_s));
    }
    return b;
  }

  // one node = one candidate checked; returns false once the budget is gone
  bool consume() {
    if (exceeded) return false;
    ++used;
    if (node_limit && used > node_limit) {
      exceeded = true;
      return false;
    }
    if (timed && (used & 1023u) == 0 && Clock::now() > deadline) {
      exceeded = true;
      return false;
    }
    return true;
  }
};

void validate_p1(std::span<const std::int64_t> p1, std::int64_t N) {
  if (p1.size() < 2) throw std::invalid_argument("seed column needs at least two entries");
  if (p1[0] != 0 || p1[1] != 1) {
    throw std::invalid_argument("seed column must start with entries 0, 1");
  }
  for (std::size_t i = 2; i < p1.size(); ++i) {
    if (p1[i] <= p1[i - 1]) throw std::invalid_argument("seed column must be strictly increasing");
    if (p1[i] >= N) throw std::invalid_argument("seed column entries must be below N");
  }
}

// mod-N cycle screen over the first n_used columns of the working buffer;
// lengths 4 .. target_girth-2, optionally restricted to a new column.
bool partial_matrix_clean(const std::vector<std::int64_t>& buf, int stride, int m, int n_used,
                          int target_girth, std::int64_t N, int required_col) {
  for (int len = 4; len <= target_girth - 2; len += 2) {
    if (detail::exists_present_cycle_raw(buf.data(), stride, m, n_used, len / 2, N, 0,
                                         required_col)) {
      return false;
    }
  }
  return true;
}

std::optional<std::vector<std::int64_t>> greedy_impl(const SmcSearchConfig& config,
                                                     std::int64_t N,
                                                     std::span<const std::int64_t> p1,
                                                     Budget& budget) {
  const int m = static_cast<int>(p1.size());
  const int n = config.cols;
  const int g = config.target_girth;

  std::vector<std::int64_t> buf(static_cast<std::size_t>(m) * n, 0);
  for (int i = 0; i < m; ++i) buf[static_cast<std::size_t>(i) * n + 1] = p1[i];

  // The strictly-avoidable seed precondition does not rule out seed cycles
  // whose sum is a nonzero multiple of N; screen those here so the
  // new-column-only checks below stay sound.
  if (!partial_matrix_clean(buf, n, m, 2, g, N, -1)) return std::nullopt;

  std::vector<std::int64_t> gammas;
  std::int64_t prev = 1;
  for (int j = 2; j < n; ++j) {
    bool found = false;
    for (std::int64_t gamma = prev + 1; gamma <= N - 1; ++gamma) {
      if (!budget.consume()) return std::nullopt;
      for (int i = 0; i < m; ++i) {
        buf[static_cast<std::size_t>(i) * n + j] = gamma * p1[i] % N;
      }
      if (partial_matrix_clean(buf, n, m, j + 1, g, N, j)) {
        gammas.push_back(gamma);
        prev = gamma;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return gammas;
}

// Lexicographic generator over the (m-2) free seed entries in {2,...,N-1}.
struct SeedColumns {
  int free_count;
  std::int64_t N;
  std::vector<std::int64_t> current;  // the full seed column [0, 1, ...]
  bool done = false;

  SeedColumns(int m, std::int64_t n_lift) : free_count(m - 2), N(n_lift) {
    current = {0, 1};
    for (int i = 0; i < free_count; ++i) current.push_back(2 + i);
    if (free_count > 0 && current.back() > N - 1) done = true;
  }

  bool advance() {
    if (free_count == 0) {
      done = true;
      return false;
    }
    // odometer over positions 2..m-1, values strictly increasing, max N-1
    for (int i = free_count - 1; i >= 0; --i) {
      const std::size_t pos = static_cast<std::size_t>(2 + i);
      if (current[pos] < N - 1 - (free_count - 1 - i)) {
        ++current[pos];
        for (std::size_t q = pos + 1; q < current.size(); ++q) {
          current[q] = current[q - 1] + 1;
        }
        return true;
      }
    }
    done = true;
    return false;
  }
};

}  // namespace

void SmcSearchConfig::validate() const {
  if (rows < 2) throw std::invalid_argument("SMC design needs at least two rows");
  if (cols <= rows) throw std::invalid_argument("SMC design requires m < n");
  if (target_girth != 6 && target_girth != 8 && target_girth != 10 && target_girth != 12) {
    throw std::invalid_argument("target girth must be one of 6, 8, 10, 12");
  }
  if (n_min > n_max) throw std::invalid_argument("empty lifting range");
}

ExponentMatrix assemble_smc(std::int64_t N, std::span<const std::int64_t> p1,
                            std::span<const std::int64_t> gammas) {
  if (N < 1) throw std::invalid_argument("lifting degree must be positive");
  validate_p1(p1, N);
  std::int64_t prev = 1;
  for (std::int64_t g : gammas) {
    if (g <= prev) throw std::invalid_argument("gammas must be strictly increasing and >= 2");
    if (g >= N) throw std::invalid_argument("gammas must be below N");
    prev = g;
  }
  const int m = static_cast<int>(p1.size());
  const int n = 2 + static_cast<int>(gammas.size());
  std::vector<std::int64_t> entries(static_cast<std::size_t>(m) * n, 0);
  for (int i = 0; i < m; ++i) {
    entries[static_cast<std::size_t>(i) * n + 1] = p1[i];
    for (int j = 2; j < n; ++j) {
      entries[static_cast<std::size_t>(i) * n + j] = gammas[j - 2] * p1[i] % N;
    }
  }
  return ExponentMatrix(m, n, std::move(entries), N);
}

bool seed_column_ok(std::span<const std::int64_t> p1, std::int64_t N, int target_girth) {
  validate_p1(p1, N);
  const int m = static_cast<int>(p1.size());
  std::vector<std::int64_t> buf(static_cast<std::size_t>(m) * 2, 0);
  std::int64_t span = 0;
  for (int i = 0; i < m; ++i) {
    buf[static_cast<std::size_t>(i) * 2 + 1] = p1[i];
    span = std::max(span, p1[i]);
  }
  const int lambda = target_girth - 2;
  for (int len = 4; len <= lambda; len += 2) {
    if (detail::exists_present_cycle_raw(buf.data(), 2, m, 2, len / 2, kUnboundedLifting, span,
                                         -1)) {
      return false;
    }
  }
  return true;
}

std::optional<std::vector<std::int64_t>> greedy_gamma_search(
    const SmcSearchConfig& config, std::int64_t N, std::span<const std::int64_t> p1) {
  config.validate();
  validate_p1(p1, N);
  if (static_cast<int>(p1.size()) != config.rows) {
    throw std::invalid_argument("seed column size must match config.rows");
  }
  Budget budget = Budget::from_config(config);
  return greedy_impl(config, N, p1, budget);
}

SmcSearchOutcome find_min_lifting(const SmcSearchConfig& config) {
  config.validate();
  SmcSearchOutcome out;
  Budget budget = Budget::from_config(config);

  const std::int64_t n_lo = std::max<std::int64_t>(config.n_min, config.cols);
  for (std::int64_t N = n_lo; N <= config.n_max; ++N) {
    for (SeedColumns seeds(config.rows, N); !seeds.done;) {
      const std::vector<std::int64_t>& p1 = seeds.current;
      if (!budget.consume()) break;
      if (seed_column_ok(p1, N, config.target_girth)) {
        auto gammas = greedy_impl(config, N, p1, budget);
        if (budget.exceeded) break;
        if (gammas) {
          SmcResult res{N, p1, *gammas, assemble_smc(N, p1, *gammas), 0};
          res.achieved_girth = girth(res.matrix, 12);
          if (res.achieved_girth != 0 && res.achieved_girth < config.target_girth) {
            throw SearchError("greedy search produced a matrix below the target girth");
          }
          if (!seed_column_ok(p1, N, config.target_girth)) {
            throw SearchError("successful search with a bad seed column");
          }
          if (!out.result) out.result = res;
          if (config.p1_strategy == P1Strategy::first_found) {
            out.nodes_used = budget.used;
            return out;
          }
          out.all_results.push_back(std::move(res));
        }
      }
      if (!seeds.advance()) break;
    }
    if (budget.exceeded) break;
    out.last_n_completed = N;
  }
  out.budget_exhausted = budget.exceeded;
  out.nodes_used = budget.used;
  return out;
}

}  // namespace cldpc
