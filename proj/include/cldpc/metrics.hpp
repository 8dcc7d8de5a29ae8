#pragma once

#include <cstdint>

namespace cldpc {

// Per-iteration binary operation count factor: 8*(8x + 12R - 11) + x.
double f_complexity(std::int64_t x, double rate);

// Full-length BP over a block code: latency nN bits, per-output-bit
// complexity I_avg * f(m, R) (independent of N).
double latency_bp(std::int64_t n, std::int64_t lifting);
double complexity_bp(double i_avg, std::int64_t m, double rate);

// Sliding-window decoding with W = alpha*(m_h+1) blocks of a bits.
double latency_sw(double alpha, std::int64_t memory_order, std::int64_t a);
double complexity_sw(double alpha, std::int64_t memory_order, double i_avg, std::int64_t c,
                     double rate);

// Improvement ratios against the best previously known code.
double theta_n(std::int64_t n_new, std::int64_t n_star);
double theta_mh(std::int64_t mh_new, std::int64_t mh_star);

enum class LatencyScheme { bp, sw };

struct LatencyReport {
  LatencyScheme scheme = LatencyScheme::bp;
  double latency_bits = 0.0;
  double per_bit_complexity = 0.0;
  // inputs echoed
  std::int64_t n = 0;
  std::int64_t lifting = 0;
  std::int64_t m = 0;
  std::int64_t a = 0;
  std::int64_t c = 0;
  std::int64_t memory_order = 0;
  double alpha = 0.0;
  double i_avg = 0.0;
  double rate = 0.0;

  friend bool operator==(const LatencyReport&, const LatencyReport&) = default;
};

LatencyReport bp_report(std::int64_t n, std::int64_t lifting, std::int64_t m, double rate,
                        double i_avg);
LatencyReport sw_report(std::int64_t a, std::int64_t c, std::int64_t memory_order, double alpha,
                        double rate, double i_avg);

}  // namespace cldpc
