#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cldpc/coupled.hpp"
#include "cldpc/decoder.hpp"
#include "cldpc/exponent_matrix.hpp"

namespace cldpc {

// BPSK over AWGN. snr_db points are Eb/N0 by default (converted with the code
// rate recorded in SimResult::rate_used), or Es/N0 when es_n0 is set:
//   sigma^2 = 1 / (2 * rate * 10^(snr/10))   (Eb/N0)
//   sigma^2 = 1 / (2 * 10^(snr/10))          (Es/N0)
struct ChannelConfig {
  std::vector<double> snr_db;
  bool es_n0 = false;
  std::uint64_t seed = 1;
};

struct StopRule {
  std::int64_t min_block_errors = 100;  // 0 disables
  std::int64_t max_bits = 10'000'000;   // 0 disables
  std::int64_t max_blocks = 0;          // 0 disables
};

struct SimOptions {
  int threads = 1;       // execution only; never changes results
  int batch_size = 64;   // trials per scheduling wave (stop rule granularity)
  bool transmit_random = false;  // block sims: encode random messages
};

struct SimPoint {
  double snr_db = 0.0;
  std::int64_t bits = 0;
  std::int64_t bit_errors = 0;
  std::int64_t blocks = 0;
  std::int64_t block_errors = 0;
  std::int64_t iteration_sum = 0;    // summed per decode (block) / per window position (sc)
  std::int64_t iteration_units = 0;  // decodes or window positions
  double elapsed_s = 0.0;

  double ber() const { return bits ? static_cast<double>(bit_errors) / bits : 0.0; }
  double bler() const { return blocks ? static_cast<double>(block_errors) / blocks : 0.0; }
  double avg_iters() const {
    return iteration_units ? static_cast<double>(iteration_sum) / iteration_units : 0.0;
  }

  friend bool operator==(const SimPoint&, const SimPoint&) = default;
};

struct SimResult {
  std::string code_id;
  std::string mode;  // "block" or "sc"
  DecoderConfig decoder;
  SlidingWindowConfig window;  // sc only; window_blocks holds the resolved W
  bool has_window = false;
  std::int64_t chain_len = 0;  // sc only, in blocks
  std::uint64_t seed = 0;
  bool es_n0 = false;
  double rate_used = 0.0;
  std::vector<SimPoint> points;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

// All-zero codeword (or random encoded messages) through the expanded block
// code. rate_used is the effective rate (nN - rank(H)) / nN.
SimResult run_block_sim(const ExponentMatrix& p, const ChannelConfig& channel,
                        const DecoderConfig& dcfg, const StopRule& stop,
                        const SimOptions& opts = {});

// Terminated chain of chain_len blocks whose last m_h block positions are
// known zeros; errors are counted over the data positions only, one BLER
// block per window output position. rate_used is the design rate (a-c)/a.
SimResult run_sc_sim(const ConvolutionalCode& code, const ChannelConfig& channel,
                     const SlidingWindowConfig& swcfg, const DecoderConfig& dcfg,
                     std::int64_t chain_len, const StopRule& stop,
                     const SimOptions& opts = {});

// CSV: '#' key=value header lines, a column header, then one row per SNR
// point. Timing never appears, so equal results serialize byte-identically.
void write_csv(const SimResult& result, std::ostream& out);
std::string to_csv(const SimResult& result);

}  // namespace cldpc
