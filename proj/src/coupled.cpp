#include "cldpc/coupled.hpp"

#include <algorithm>
#include <stdexcept>

namespace cldpc {

namespace {

ExponentMatrix normalize_min_zero(const ExponentMatrix& m) {
  const std::int64_t lo = m.min_entry();
  if (lo == 0) return m.is_finite() ? m.with_lifting(kUnboundedLifting) : m;
  std::vector<std::int64_t> e(m.entries().begin(), m.entries().end());
  for (auto& v : e) v -= lo;
  return ExponentMatrix(m.rows(), m.cols(), std::move(e), kUnboundedLifting);
}

}  // namespace

ConvolutionalCode::ConvolutionalCode(ExponentMatrix base) : base_(normalize_min_zero(base)) {
  if (base_.rows() > base_.cols()) {
    throw std::invalid_argument("convolutional code requires c <= a");
  }
}

SymbolicMatrix to_symbolic(const ExponentMatrix& m) {
  SymbolicMatrix s;
  s.rows = m.rows();
  s.cols = m.cols();
  s.degrees.resize(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      s.degrees[static_cast<std::size_t>(i) * m.cols() + j] = {m.at(i, j)};
    }
  }
  return s;
}

std::vector<BinaryBlock> band_blocks(const ConvolutionalCode& code) {
  const ExponentMatrix& p = code.base();
  const std::int64_t mh = code.memory_order();
  std::vector<BinaryBlock> blocks(static_cast<std::size_t>(mh + 1));
  for (auto& b : blocks) {
    b.assign(static_cast<std::size_t>(p.rows()),
             std::vector<std::uint8_t>(static_cast<std::size_t>(p.cols()), 0));
  }
  for (int i = 0; i < p.rows(); ++i) {
    for (int j = 0; j < p.cols(); ++j) {
      blocks[static_cast<std::size_t>(p.at(i, j))][static_cast<std::size_t>(i)]
            [static_cast<std::size_t>(j)] = 1;
    }
  }
  return blocks;
}

WindowMatrix window_matrix(const ConvolutionalCode& code, std::int64_t window_blocks,
                           std::int64_t position, std::int64_t chain_len) {
  if (window_blocks < 1) throw std::invalid_argument("window must span at least one block");
  if (position < 0 || position + window_blocks > chain_len) {
    throw std::invalid_argument("window exceeds the chain bounds");
  }
  const ExponentMatrix& p = code.base();
  const int c = p.rows();
  const int a = p.cols();

  WindowMatrix w;
  w.position = position;
  w.blocks = window_blocks;
  w.target_cols = a;
  w.h.rows = window_blocks * c;
  w.h.cols = window_blocks * a;
  w.h.row_support.assign(static_cast<std::size_t>(w.h.rows), {});
  w.row_references_past.assign(static_cast<std::size_t>(w.h.rows), 0);

  for (std::int64_t br = 0; br < window_blocks; ++br) {
    const std::int64_t r = position + br;  // global block row
    for (int i = 0; i < c; ++i) {
      auto& sup = w.h.row_support[static_cast<std::size_t>(br * c + i)];
      bool past = false;
      for (int j = 0; j < a; ++j) {
        const std::int64_t s = r - p.at(i, j);  // global block column of this tap
        if (s < 0) continue;                    // before the chain start
        if (s < position) {
          past = true;  // tap on an already-decided block
          continue;
        }
        if (s >= position + window_blocks) continue;  // cannot happen: degrees >= 0
        sup.push_back(static_cast<std::int32_t>((s - position) * a + j));
      }
      std::sort(sup.begin(), sup.end());
      w.row_references_past[static_cast<std::size_t>(br * c + i)] = past ? 1 : 0;
    }
  }
  return w;
}

ConvolutionalCode unwrap_qc(const ExponentMatrix& m) {
  if (!m.is_finite()) throw std::invalid_argument("unwrap expects a finite-lifting matrix");
  return ConvolutionalCode(m.with_lifting(kUnboundedLifting));
}

namespace {

std::int64_t grid_spread(const std::vector<std::int64_t>& g) {
  auto [lo, hi] = std::minmax_element(g.begin(), g.end());
  return *hi - *lo;
}

}  // namespace

namespace {

// With free column offsets every column's degree interval can be translated
// independently, so for fixed row offsets the best achievable spread is the
// widest single column span. Descend on row offsets against that objective,
// then realize it by aligning every column to start at zero.
std::vector<std::int64_t> reduce_grid(std::vector<std::int64_t> grid, int rows, int cols,
                                      int max_sweeps) {
  auto col_span = [&](int j) {
    std::int64_t lo = INT64_MAX, hi = INT64_MIN;
    for (int i = 0; i < rows; ++i) {
      const std::int64_t v = grid[static_cast<std::size_t>(i) * cols + j];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return hi - lo;
  };
  auto objective = [&] {
    std::int64_t worst = 0;
    for (int j = 0; j < cols; ++j) worst = std::max(worst, col_span(j));
    return worst;
  };

  const std::int64_t radius = grid_spread(grid);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool improved = false;
    for (int i = 0; i < rows; ++i) {
      std::int64_t best = objective();
      std::int64_t best_delta = 0;
      for (std::int64_t delta = -radius; delta <= radius; ++delta) {
        if (delta == 0) continue;
        for (int j = 0; j < cols; ++j) grid[static_cast<std::size_t>(i) * cols + j] += delta;
        const std::int64_t obj = objective();
        for (int j = 0; j < cols; ++j) grid[static_cast<std::size_t>(i) * cols + j] -= delta;
        if (obj < best) {
          best = obj;
          best_delta = delta;
        }
      }
      if (best_delta != 0) {
        for (int j = 0; j < cols; ++j) grid[static_cast<std::size_t>(i) * cols + j] += best_delta;
        improved = true;
      }
    }
    if (!improved) break;
  }

  // column pass: translate each column interval to start at zero
  for (int j = 0; j < cols; ++j) {
    std::int64_t lo = INT64_MAX;
    for (int i = 0; i < rows; ++i) {
      lo = std::min(lo, grid[static_cast<std::size_t>(i) * cols + j]);
    }
    for (int i = 0; i < rows; ++i) grid[static_cast<std::size_t>(i) * cols + j] -= lo;
  }
  return grid;
}

std::vector<std::int64_t> transpose_grid(const std::vector<std::int64_t>& g, int rows, int cols) {
  std::vector<std::int64_t> t(g.size());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      t[static_cast<std::size_t>(j) * rows + i] = g[static_cast<std::size_t>(i) * cols + j];
    }
  }
  return t;
}

}  // namespace

ConvolutionalCode reduce_memory(const ConvolutionalCode& code, int max_sweeps) {
  const ExponentMatrix& p = code.base();
  const int c = p.rows();
  const int a = p.cols();
  std::vector<std::int64_t> grid(p.entries().begin(), p.entries().end());

  // rows-then-columns pass, plus the transposed pass; keep the tighter one
  std::vector<std::int64_t> by_rows = reduce_grid(grid, c, a, max_sweeps);
  std::vector<std::int64_t> by_cols = transpose_grid(
      reduce_grid(transpose_grid(grid, c, a), a, c, max_sweeps), a, c);

  std::vector<std::int64_t>& best =
      grid_spread(by_cols) < grid_spread(by_rows) ? by_cols : by_rows;
  if (grid_spread(best) >= grid_spread(grid)) {
    return code;  // no improvement found; hand back the input unchanged
  }
  const std::int64_t lo = *std::min_element(best.begin(), best.end());
  for (auto& v : best) v -= lo;
  return ConvolutionalCode(ExponentMatrix(c, a, std::move(best), kUnboundedLifting));
}

}  // namespace cldpc
