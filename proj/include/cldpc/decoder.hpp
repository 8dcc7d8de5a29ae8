#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cldpc/coupled.hpp"
#include "cldpc/tanner.hpp"

namespace cldpc {

enum class BpAlgorithm {
  sum_product,  // log-domain, pairwise-stable check update
  min_sum,      // normalized min-sum
};

struct DecoderConfig {
  BpAlgorithm algorithm = BpAlgorithm::sum_product;
  int max_iters = 100;
  bool early_stop = true;  // syndrome check; forced off for sliding window
  double llr_clip = 25.0;
  double min_sum_scale = 0.75;

  void validate() const;

  friend bool operator==(const DecoderConfig&, const DecoderConfig&) = default;
};

struct DecodeOutcome {
  std::vector<std::uint8_t> bits;
  int iterations = 0;        // per decode (block) or per window position (SW)
  bool syndrome_ok = false;  // whole matrix (block decode)
  std::vector<std::uint8_t> window_syndrome_ok;  // per window position (SW)
};

// Flooding-schedule belief propagation. The first pinned_prefix variables are
// frozen: they send their channel LLR unchanged every iteration and their
// decisions never flip (used for already-committed window symbols).
DecodeOutcome bp_decode(const ParityCheckMatrix& h, std::span<const double> llr_in,
                        const DecoderConfig& cfg, std::int64_t pinned_prefix = 0);

// Reusable decoder over a fixed Tanner graph. decode() is const and
// allocates its own working state, so one instance may serve many threads.
class BpDecoder {
 public:
  explicit BpDecoder(const ParityCheckMatrix& h);
  ~BpDecoder();
  BpDecoder(BpDecoder&&) noexcept;
  BpDecoder& operator=(BpDecoder&&) noexcept;

  std::int64_t var_count() const;
  DecodeOutcome decode(std::span<const double> llr_in, const DecoderConfig& cfg,
                       std::int64_t pinned_prefix = 0) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct SlidingWindowConfig {
  double alpha = 5.0;            // W = alpha * (m_h + 1) when window_blocks == 0
  std::int64_t window_blocks = 0;
  int iters_per_position = 100;

  std::int64_t resolve_window(std::int64_t memory_order) const;

  friend bool operator==(const SlidingWindowConfig&, const SlidingWindowConfig&) = default;
};

// Decodes a terminated chain of chain_len blocks of a symbols. Position t
// decodes the window starting at block t and commits block t; the final
// position commits every remaining block, so a window covering the whole
// chain degenerates to one full-chain BP pass. Committed symbols re-enter
// later windows as saturated LLRs. Early stopping is always disabled and
// every position runs exactly iters_per_position iterations.
DecodeOutcome sliding_window_decode(const ConvolutionalCode& code,
                                    std::span<const double> llr_chain,
                                    std::int64_t chain_len, const SlidingWindowConfig& swcfg,
                                    const DecoderConfig& cfg);

}  // namespace cldpc
