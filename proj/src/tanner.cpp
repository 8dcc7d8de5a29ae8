#include "cldpc/tanner.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace cldpc {

std::int64_t ParityCheckMatrix::ones() const {
  std::int64_t total = 0;
  for (const auto& r : row_support) total += static_cast<std::int64_t>(r.size());
  return total;
}

bool ParityCheckMatrix::get(std::int64_t r, std::int64_t c) const {
  const auto& s = row_support[static_cast<std::size_t>(r)];
  return std::binary_search(s.begin(), s.end(), static_cast<std::int32_t>(c));
}

std::vector<std::vector<std::int32_t>> ParityCheckMatrix::col_support() const {
  std::vector<std::vector<std::int32_t>> cs(static_cast<std::size_t>(cols));
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int32_t c : row_support[static_cast<std::size_t>(r)]) {
      cs[static_cast<std::size_t>(c)].push_back(static_cast<std::int32_t>(r));
    }
  }
  return cs;
}

BlockRef qc_block_of(const ParityCheckMatrix& h, std::int64_t r, std::int64_t c) {
  if (!h.qc) throw std::invalid_argument("matrix is not a QC expansion");
  const auto& q = *h.qc;
  BlockRef ref;
  ref.block_row = static_cast<int>(r / q.N);
  ref.block_col = static_cast<int>(c / q.N);
  ref.shift = ((c % q.N) - (r % q.N) + q.N) % q.N;
  return ref;
}

ParityCheckMatrix expand_block(const ExponentMatrix& m) {
  if (!m.is_finite()) {
    throw std::invalid_argument("expand_block needs a finite lifting degree");
  }
  const std::int64_t N = m.lifting();
  ParityCheckMatrix h;
  h.rows = static_cast<std::int64_t>(m.rows()) * N;
  h.cols = static_cast<std::int64_t>(m.cols()) * N;
  h.row_support.assign(static_cast<std::size_t>(h.rows), {});
  for (int i = 0; i < m.rows(); ++i) {
    for (std::int64_t r = 0; r < N; ++r) {
      auto& sup = h.row_support[static_cast<std::size_t>(i * N + r)];
      sup.reserve(m.cols());
      for (int j = 0; j < m.cols(); ++j) {
        const std::int64_t c = j * N + (r + m.at(i, j)) % N;
        sup.push_back(static_cast<std::int32_t>(c));
      }
      std::sort(sup.begin(), sup.end());
    }
  }
  h.qc = ParityCheckMatrix::QcOrigin{m.rows(), m.cols(), N};
  return h;
}

int tanner_girth(const ParityCheckMatrix& h, int cap) {
  if (cap < 4 || cap % 2 != 0) {
    throw std::invalid_argument("girth cap must be even and >= 4");
  }
  // variable nodes 0..cols-1, check nodes cols..cols+rows-1
  const std::int64_t n_nodes = h.cols + h.rows;
  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(n_nodes));
  for (std::int64_t r = 0; r < h.rows; ++r) {
    for (std::int32_t c : h.row_support[static_cast<std::size_t>(r)]) {
      adj[static_cast<std::size_t>(c)].push_back(static_cast<std::int32_t>(h.cols + r));
      adj[static_cast<std::size_t>(h.cols + r)].push_back(static_cast<std::int32_t>(c));
    }
  }

  int best = 0;
  const int depth_limit = cap / 2 - 1;  // expanding deeper cannot close a <=cap cycle
  std::vector<int> dist(static_cast<std::size_t>(n_nodes));
  std::vector<std::int32_t> parent(static_cast<std::size_t>(n_nodes));
  std::vector<std::int32_t> queue;
  queue.reserve(static_cast<std::size_t>(n_nodes));

  for (std::int64_t s = 0; s < h.cols; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(static_cast<std::int32_t>(s));
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t u = queue[head];
      if (dist[static_cast<std::size_t>(u)] > depth_limit) break;
      for (std::int32_t w : adj[static_cast<std::size_t>(u)]) {
        if (w == parent[static_cast<std::size_t>(u)]) continue;
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else {
          const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
          if (len <= cap && (best == 0 || len < best)) best = len;
        }
      }
    }
    if (best == 4) break;  // nothing shorter exists in a bipartite graph
  }
  return best;
}

}  // namespace cldpc
