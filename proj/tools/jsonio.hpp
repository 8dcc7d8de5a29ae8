// JSON views of the C-API payloads used by the --json output mode. Kept as
// plain structs with field-complete serialization so emitted objects parse
// back losslessly.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "compactldpc.h"

namespace cldpc_cli {

struct SimPointView {
  double snr_db = 0.0;
  std::int64_t bits = 0;
  std::int64_t bit_errors = 0;
  std::int64_t blocks = 0;
  std::int64_t block_errors = 0;
  double ber = 0.0;
  double bler = 0.0;
  double avg_iters = 0.0;
  double elapsed_s = 0.0;

  friend bool operator==(const SimPointView&, const SimPointView&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SimPointView, snr_db, bits, bit_errors, blocks, block_errors,
                                   ber, bler, avg_iters, elapsed_s)

struct SimResultView {
  std::string code_id;
  std::string mode;       // "block" | "sc"
  std::string algorithm;  // "sum-product" | "min-sum"
  std::int32_t max_iters = 0;
  bool early_stop = false;
  double llr_clip = 0.0;
  double min_sum_scale = 0.0;
  double alpha = 0.0;
  std::int64_t window_blocks = 0;
  std::int32_t iters_per_position = 0;
  std::int64_t chain_len = 0;
  std::uint64_t seed = 0;
  std::string snr_convention;  // "ebn0" | "esn0"
  double rate_used = 0.0;
  std::vector<SimPointView> points;

  friend bool operator==(const SimResultView&, const SimResultView&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SimResultView, code_id, mode, algorithm, max_iters, early_stop,
                                   llr_clip, min_sum_scale, alpha, window_blocks,
                                   iters_per_position, chain_len, seed, snr_convention, rate_used,
                                   points)

struct LatencyReportView {
  std::string scheme;  // "bp" | "sw"
  double latency_bits = 0.0;
  double per_bit_complexity = 0.0;
  std::int64_t n = 0;
  std::int64_t lifting = 0;
  std::int64_t m = 0;
  std::int64_t a = 0;
  std::int64_t c = 0;
  std::int64_t memory_order = 0;
  double alpha = 0.0;
  double i_avg = 0.0;
  double rate = 0.0;

  friend bool operator==(const LatencyReportView&, const LatencyReportView&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LatencyReportView, scheme, latency_bits, per_bit_complexity, n,
                                   lifting, m, a, c, memory_order, alpha, i_avg, rate)

inline SimPointView to_view(const cldpc_sim_point& p) {
  return SimPointView{p.snr_db, p.bits, p.bit_errors, p.blocks,
                      p.block_errors, p.ber, p.bler, p.avg_iters, p.elapsed_s};
}

}  // namespace cldpc_cli
