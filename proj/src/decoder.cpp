#include "cldpc/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cldpc {

namespace {

struct Graph {
  std::int64_t n_vars = 0;
  std::int64_t n_checks = 0;
  std::vector<std::int32_t> chk_ptr;    // per check, offset into edge arrays
  std::vector<std::int32_t> edge_var;   // edges grouped by check
  std::vector<std::int32_t> var_ptr;    // per var, offset into var_edges
  std::vector<std::int32_t> var_edges;  // edge ids grouped by var

  explicit Graph(const ParityCheckMatrix& h) {
    n_vars = h.cols;
    n_checks = h.rows;
    chk_ptr.reserve(static_cast<std::size_t>(n_checks) + 1);
    chk_ptr.push_back(0);
    for (const auto& sup : h.row_support) {
      for (std::int32_t c : sup) edge_var.push_back(c);
      chk_ptr.push_back(static_cast<std::int32_t>(edge_var.size()));
    }
    std::vector<std::int32_t> deg(static_cast<std::size_t>(n_vars), 0);
    for (std::int32_t v : edge_var) ++deg[static_cast<std::size_t>(v)];
    var_ptr.assign(static_cast<std::size_t>(n_vars) + 1, 0);
    for (std::int64_t v = 0; v < n_vars; ++v) {
      var_ptr[static_cast<std::size_t>(v) + 1] =
          var_ptr[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
    }
    var_edges.resize(edge_var.size());
    std::vector<std::int32_t> fill(var_ptr.begin(), var_ptr.end() - 1);
    for (std::size_t e = 0; e < edge_var.size(); ++e) {
      var_edges[static_cast<std::size_t>(fill[static_cast<std::size_t>(edge_var[e])]++)] =
          static_cast<std::int32_t>(e);
    }
  }
};

inline double clip(double x, double lim) { return std::clamp(x, -lim, lim); }

// Pairwise-stable check-node operation for log-domain sum-product.
inline double boxplus(double a, double b) {
  const double sign = std::signbit(a) == std::signbit(b) ? 1.0 : -1.0;
  const double mag = std::min(std::fabs(a), std::fabs(b));
  return sign * mag + std::log1p(std::exp(-std::fabs(a + b))) -
         std::log1p(std::exp(-std::fabs(a - b)));
}

inline double signed_min(double a, double b) {
  const double sign = std::signbit(a) == std::signbit(b) ? 1.0 : -1.0;
  return sign * std::min(std::fabs(a), std::fabs(b));
}

struct Workspace {
  std::vector<double> v2c, c2v, fwd, bwd;
};

void check_pass(const Graph& g, const DecoderConfig& cfg, Workspace& ws, double sat) {
  const bool sp = cfg.algorithm == BpAlgorithm::sum_product;
  for (std::int64_t chk = 0; chk < g.n_checks; ++chk) {
    const std::int32_t lo = g.chk_ptr[static_cast<std::size_t>(chk)];
    const std::int32_t hi = g.chk_ptr[static_cast<std::size_t>(chk) + 1];
    const int deg = hi - lo;
    if (deg == 0) continue;
    if (deg == 1) {
      // a weight-one check pins its variable to zero
      ws.c2v[static_cast<std::size_t>(lo)] = sat;
      continue;
    }
    ws.fwd.resize(static_cast<std::size_t>(deg));
    ws.bwd.resize(static_cast<std::size_t>(deg));
    ws.fwd[0] = ws.v2c[static_cast<std::size_t>(lo)];
    ws.bwd[static_cast<std::size_t>(deg - 1)] = ws.v2c[static_cast<std::size_t>(hi - 1)];
    if (sp) {
      for (int t = 1; t < deg; ++t) {
        ws.fwd[static_cast<std::size_t>(t)] =
            boxplus(ws.fwd[static_cast<std::size_t>(t - 1)],
                    ws.v2c[static_cast<std::size_t>(lo + t)]);
        ws.bwd[static_cast<std::size_t>(deg - 1 - t)] =
            boxplus(ws.bwd[static_cast<std::size_t>(deg - t)],
                    ws.v2c[static_cast<std::size_t>(hi - 1 - t)]);
      }
      ws.c2v[static_cast<std::size_t>(lo)] = ws.bwd[1];
      ws.c2v[static_cast<std::size_t>(hi - 1)] = ws.fwd[static_cast<std::size_t>(deg - 2)];
      for (int t = 1; t < deg - 1; ++t) {
        ws.c2v[static_cast<std::size_t>(lo + t)] =
            boxplus(ws.fwd[static_cast<std::size_t>(t - 1)],
                    ws.bwd[static_cast<std::size_t>(t + 1)]);
      }
    } else {
      for (int t = 1; t < deg; ++t) {
        ws.fwd[static_cast<std::size_t>(t)] =
            signed_min(ws.fwd[static_cast<std::size_t>(t - 1)],
                       ws.v2c[static_cast<std::size_t>(lo + t)]);
        ws.bwd[static_cast<std::size_t>(deg - 1 - t)] =
            signed_min(ws.bwd[static_cast<std::size_t>(deg - t)],
                       ws.v2c[static_cast<std::size_t>(hi - 1 - t)]);
      }
      const double s = cfg.min_sum_scale;
      ws.c2v[static_cast<std::size_t>(lo)] = s * ws.bwd[1];
      ws.c2v[static_cast<std::size_t>(hi - 1)] = s * ws.fwd[static_cast<std::size_t>(deg - 2)];
      for (int t = 1; t < deg - 1; ++t) {
        ws.c2v[static_cast<std::size_t>(lo + t)] =
            s * signed_min(ws.fwd[static_cast<std::size_t>(t - 1)],
                           ws.bwd[static_cast<std::size_t>(t + 1)]);
      }
    }
  }
}

bool syndrome_ok_bits(const Graph& g, const std::vector<std::uint8_t>& bits) {
  for (std::int64_t chk = 0; chk < g.n_checks; ++chk) {
    std::uint8_t acc = 0;
    for (std::int32_t e = g.chk_ptr[static_cast<std::size_t>(chk)];
         e < g.chk_ptr[static_cast<std::size_t>(chk) + 1]; ++e) {
      acc ^= bits[static_cast<std::size_t>(g.edge_var[static_cast<std::size_t>(e)])];
    }
    if (acc) return false;
  }
  return true;
}

DecodeOutcome bp_decode_graph(const Graph& g, std::span<const double> llr_in,
                              const DecoderConfig& cfg, std::int64_t pinned_prefix) {
  const double sat = cfg.llr_clip;
  Workspace ws;
  ws.v2c.resize(g.edge_var.size());
  ws.c2v.assign(g.edge_var.size(), 0.0);

  std::vector<double> channel(llr_in.size());
  for (std::size_t v = 0; v < channel.size(); ++v) channel[v] = clip(llr_in[v], sat);

  for (std::size_t e = 0; e < g.edge_var.size(); ++e) {
    ws.v2c[e] = channel[static_cast<std::size_t>(g.edge_var[e])];
  }

  DecodeOutcome out;
  out.bits.assign(static_cast<std::size_t>(g.n_vars), 0);

  int iter = 0;
  while (iter < cfg.max_iters) {
    ++iter;
    check_pass(g, cfg, ws, sat);
    for (std::int64_t v = 0; v < g.n_vars; ++v) {
      if (v < pinned_prefix) {
        out.bits[static_cast<std::size_t>(v)] = channel[static_cast<std::size_t>(v)] < 0.0;
        for (std::int32_t t = g.var_ptr[static_cast<std::size_t>(v)];
             t < g.var_ptr[static_cast<std::size_t>(v) + 1]; ++t) {
          ws.v2c[static_cast<std::size_t>(g.var_edges[static_cast<std::size_t>(t)])] =
              channel[static_cast<std::size_t>(v)];
        }
        continue;
      }
      double post = channel[static_cast<std::size_t>(v)];
      for (std::int32_t t = g.var_ptr[static_cast<std::size_t>(v)];
           t < g.var_ptr[static_cast<std::size_t>(v) + 1]; ++t) {
        post += ws.c2v[static_cast<std::size_t>(g.var_edges[static_cast<std::size_t>(t)])];
      }
      out.bits[static_cast<std::size_t>(v)] = post < 0.0;
      for (std::int32_t t = g.var_ptr[static_cast<std::size_t>(v)];
           t < g.var_ptr[static_cast<std::size_t>(v) + 1]; ++t) {
        const std::size_t e =
            static_cast<std::size_t>(g.var_edges[static_cast<std::size_t>(t)]);
        ws.v2c[e] = clip(post - ws.c2v[e], sat);
      }
    }
    if (cfg.early_stop && syndrome_ok_bits(g, out.bits)) {
      out.iterations = iter;
      out.syndrome_ok = true;
      return out;
    }
  }
  out.iterations = iter;
  out.syndrome_ok = syndrome_ok_bits(g, out.bits);
  return out;
}

}  // namespace

void DecoderConfig::validate() const {
  if (max_iters < 1) throw std::invalid_argument("decoder needs at least one iteration");
  if (!(llr_clip > 0.0)) throw std::invalid_argument("LLR clip must be positive");
  if (algorithm == BpAlgorithm::min_sum && (min_sum_scale <= 0.0 || min_sum_scale > 1.0)) {
    throw std::invalid_argument("min-sum scale must be in (0, 1]");
  }
}

struct BpDecoder::Impl {
  Graph graph;
  explicit Impl(const ParityCheckMatrix& h) : graph(h) {}
};

BpDecoder::BpDecoder(const ParityCheckMatrix& h) : impl_(std::make_unique<Impl>(h)) {}
BpDecoder::~BpDecoder() = default;
BpDecoder::BpDecoder(BpDecoder&&) noexcept = default;
BpDecoder& BpDecoder::operator=(BpDecoder&&) noexcept = default;

std::int64_t BpDecoder::var_count() const { return impl_->graph.n_vars; }

DecodeOutcome BpDecoder::decode(std::span<const double> llr_in, const DecoderConfig& cfg,
                                std::int64_t pinned_prefix) const {
  cfg.validate();
  if (static_cast<std::int64_t>(llr_in.size()) != impl_->graph.n_vars) {
    throw std::invalid_argument("LLR vector length must equal the code length");
  }
  if (pinned_prefix < 0 || pinned_prefix > impl_->graph.n_vars) {
    throw std::invalid_argument("pinned prefix out of range");
  }
  return bp_decode_graph(impl_->graph, llr_in, cfg, pinned_prefix);
}

DecodeOutcome bp_decode(const ParityCheckMatrix& h, std::span<const double> llr_in,
                        const DecoderConfig& cfg, std::int64_t pinned_prefix) {
  return BpDecoder(h).decode(llr_in, cfg, pinned_prefix);
}

std::int64_t SlidingWindowConfig::resolve_window(std::int64_t memory_order) const {
  if (window_blocks > 0) return window_blocks;
  const std::int64_t w = std::llround(alpha * static_cast<double>(memory_order + 1));
  return std::max<std::int64_t>(1, w);
}

DecodeOutcome sliding_window_decode(const ConvolutionalCode& code,
                                    std::span<const double> llr_chain,
                                    std::int64_t chain_len, const SlidingWindowConfig& swcfg,
                                    const DecoderConfig& cfg) {
  cfg.validate();
  if (swcfg.iters_per_position < 1) {
    throw std::invalid_argument("window decoding needs at least one iteration per position");
  }
  const int a = code.symbol_count();
  const int c = code.check_count();
  const std::int64_t mh = code.memory_order();
  if (chain_len < 1) throw std::invalid_argument("chain must contain at least one block");
  if (static_cast<std::int64_t>(llr_chain.size()) != chain_len * a) {
    throw std::invalid_argument("LLR chain length must equal chain_len * a");
  }

  const std::int64_t W = std::min(swcfg.resolve_window(mh), chain_len);
  const std::int64_t positions = chain_len - W + 1;

  DecoderConfig window_cfg = cfg;
  window_cfg.early_stop = false;  // fixed iteration count per position
  window_cfg.max_iters = swcfg.iters_per_position;

  DecodeOutcome out;
  out.bits.assign(static_cast<std::size_t>(chain_len) * a, 0);
  out.iterations = swcfg.iters_per_position;
  out.window_syndrome_ok.assign(static_cast<std::size_t>(positions), 0);

  // Decode graphs keyed by the number of past blocks attached in front of the
  // window; every geometry repeats once t >= m_h.
  const ExponentMatrix& p = code.base();
  std::map<std::int64_t, Graph> graphs;
  std::vector<double> llr;
  for (std::int64_t t = 0; t < positions; ++t) {
    const std::int64_t past = std::min<std::int64_t>(t, mh);
    auto it = graphs.find(past);
    if (it == graphs.end()) {
      // columns: past blocks [t-past, t) then the window [t, t+W)
      ParityCheckMatrix ext;
      ext.rows = W * c;
      ext.cols = (past + W) * a;
      ext.row_support.assign(static_cast<std::size_t>(ext.rows), {});
      for (std::int64_t br = 0; br < W; ++br) {
        const std::int64_t r = t + br;
        for (int i = 0; i < c; ++i) {
          auto& sup = ext.row_support[static_cast<std::size_t>(br * c + i)];
          for (int j = 0; j < a; ++j) {
            const std::int64_t s = r - p.at(i, j);
            if (s < t - past) continue;  // before the chain start
            sup.push_back(static_cast<std::int32_t>((s - (t - past)) * a + j));
          }
          std::sort(sup.begin(), sup.end());
        }
      }
      it = graphs.emplace(past, Graph(ext)).first;
    }
    const Graph& g = it->second;

    llr.resize(static_cast<std::size_t>((past + W) * a));
    for (std::int64_t b = 0; b < past; ++b) {
      const std::int64_t pos = t - past + b;
      for (int j = 0; j < a; ++j) {
        const bool bit = out.bits[static_cast<std::size_t>(pos * a + j)];
        llr[static_cast<std::size_t>(b * a + j)] = bit ? -cfg.llr_clip : cfg.llr_clip;
      }
    }
    std::copy(llr_chain.begin() + t * a, llr_chain.begin() + (t + W) * a,
              llr.begin() + past * a);

    DecodeOutcome win = bp_decode_graph(g, llr, window_cfg, past * a);
    out.window_syndrome_ok[static_cast<std::size_t>(t)] = win.syndrome_ok ? 1 : 0;

    const std::int64_t commit_blocks = (t == positions - 1) ? W : 1;
    for (std::int64_t b = 0; b < commit_blocks; ++b) {
      for (int j = 0; j < a; ++j) {
        out.bits[static_cast<std::size_t>((t + b) * a + j)] =
            win.bits[static_cast<std::size_t>((past + b) * a + j)];
      }
    }
  }
  return out;
}

}  // namespace cldpc
