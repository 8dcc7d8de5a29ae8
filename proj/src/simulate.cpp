#include "cldpc/simulate.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cldpc/gf2.hpp"
#include "cldpc/tanner.hpp"

namespace cldpc {

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Counter-derived per-trial stream: identical draws for a given (seed, trial)
// pair regardless of scheduling. The SNR point is deliberately not part of
// the key, so sweeps and window-size comparisons share their random numbers.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial) {
    state_ = mix64(seed ^ 0x5851F42D4C957F2Dull);
    state_ = mix64(state_ ^ mix64(trial + 0x14057B7EF767814Full));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in (0, 1]
  double uniform01() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  bool next_bit() { return next_u64() >> 63; }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::uint64_t state_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct Tally {
  std::int64_t bits = 0;
  std::int64_t bit_errors = 0;
  std::int64_t blocks = 0;
  std::int64_t block_errors = 0;
  std::int64_t iteration_sum = 0;
  std::int64_t iteration_units = 0;

  void add(const Tally& o) {
    bits += o.bits;
    bit_errors += o.bit_errors;
    blocks += o.blocks;
    block_errors += o.block_errors;
    iteration_sum += o.iteration_sum;
    iteration_units += o.iteration_units;
  }
};

double noise_variance(double snr_db, bool es_n0, double rate) {
  const double lin = std::pow(10.0, snr_db / 10.0);
  return es_n0 ? 1.0 / (2.0 * lin) : 1.0 / (2.0 * rate * lin);
}

bool stop_reached(const StopRule& stop, const Tally& t) {
  if (stop.min_block_errors > 0 && t.block_errors >= stop.min_block_errors) return true;
  if (stop.max_bits > 0 && t.bits >= stop.max_bits) return true;
  if (stop.max_blocks > 0 && t.blocks >= stop.max_blocks) return true;
  return false;
}

// Runs trials in fixed-size waves; the per-trial function must derive all of
// its randomness from the trial index. Thread count never changes the set of
// trials executed, only who executes them.
template <typename TrialFn>
Tally run_waves(const StopRule& stop, const SimOptions& opts, const TrialFn& trial_fn) {
  const int threads = std::max(1, opts.threads);
  const std::int64_t wave = std::max(1, opts.batch_size);
  Tally total;
  std::int64_t next_trial = 0;
  while (true) {
    std::vector<Tally> parts(static_cast<std::size_t>(threads));
    if (threads == 1) {
      for (std::int64_t t = next_trial; t < next_trial + wave; ++t) {
        parts[0].add(trial_fn(static_cast<std::uint64_t>(t)));
      }
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(threads));
      for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          for (std::int64_t t = next_trial + w; t < next_trial + wave; t += threads) {
            parts[static_cast<std::size_t>(w)].add(trial_fn(static_cast<std::uint64_t>(t)));
          }
        });
      }
      for (auto& th : pool) th.join();
    }
    for (const Tally& p : parts) total.add(p);
    next_trial += wave;
    if (stop_reached(stop, total)) break;
  }
  return total;
}

void validate_channel(const ChannelConfig& channel) {
  if (channel.snr_db.empty()) throw std::invalid_argument("at least one SNR point required");
}

}  // namespace

SimResult run_block_sim(const ExponentMatrix& p, const ChannelConfig& channel,
                        const DecoderConfig& dcfg, const StopRule& stop,
                        const SimOptions& opts) {
  validate_channel(channel);
  dcfg.validate();
  const ParityCheckMatrix h = expand_block(p);
  const BpDecoder decoder(h);
  const EncoderPlan plan = build_encoder(h);
  const double rate = static_cast<double>(plan.k) / static_cast<double>(plan.n);
  const std::int64_t n_bits = h.cols;

  SimResult result;
  result.mode = "block";
  result.decoder = dcfg;
  result.seed = channel.seed;
  result.es_n0 = channel.es_n0;
  result.rate_used = rate;

  for (std::size_t si = 0; si < channel.snr_db.size(); ++si) {
    const double snr = channel.snr_db[si];
    const double sigma2 = noise_variance(snr, channel.es_n0, rate);
    const double sigma = std::sqrt(sigma2);
    const auto t0 = std::chrono::steady_clock::now();

    auto trial = [&](std::uint64_t idx) {
      TrialRng rng(channel.seed, idx);
      std::vector<std::uint8_t> word;
      if (opts.transmit_random) {
        std::vector<std::uint8_t> msg(static_cast<std::size_t>(plan.k));
        for (auto& b : msg) b = rng.next_bit();
        word = encode(plan, msg);
      } else {
        word.assign(static_cast<std::size_t>(n_bits), 0);
      }
      std::vector<double> llr(static_cast<std::size_t>(n_bits));
      for (std::int64_t b = 0; b < n_bits; ++b) {
        const double x = word[static_cast<std::size_t>(b)] ? -1.0 : 1.0;
        const double y = x + sigma * rng.gaussian();
        llr[static_cast<std::size_t>(b)] = 2.0 * y / sigma2;
      }
      const DecodeOutcome out = decoder.decode(llr, dcfg);
      Tally t;
      t.bits = n_bits;
      t.blocks = 1;
      for (std::int64_t b = 0; b < n_bits; ++b) {
        if (out.bits[static_cast<std::size_t>(b)] != word[static_cast<std::size_t>(b)]) {
          ++t.bit_errors;
        }
      }
      t.block_errors = t.bit_errors ? 1 : 0;
      t.iteration_sum = out.iterations;
      t.iteration_units = 1;
      return t;
    };

    const Tally tally = run_waves(stop, opts, trial);
    SimPoint point;
    point.snr_db = snr;
    point.bits = tally.bits;
    point.bit_errors = tally.bit_errors;
    point.blocks = tally.blocks;
    point.block_errors = tally.block_errors;
    point.iteration_sum = tally.iteration_sum;
    point.iteration_units = tally.iteration_units;
    point.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    result.points.push_back(point);
  }
  return result;
}

SimResult run_sc_sim(const ConvolutionalCode& code, const ChannelConfig& channel,
                     const SlidingWindowConfig& swcfg, const DecoderConfig& dcfg,
                     std::int64_t chain_len, const StopRule& stop, const SimOptions& opts) {
  validate_channel(channel);
  dcfg.validate();
  const int a = code.symbol_count();
  const std::int64_t mh = code.memory_order();
  const std::int64_t data_blocks = chain_len - mh;
  if (data_blocks < 1) {
    throw std::invalid_argument("chain must be longer than the termination tail");
  }
  const std::int64_t W = std::min(swcfg.resolve_window(mh), chain_len);
  const std::int64_t positions = chain_len - W + 1;
  const double rate = code.rate();

  SimResult result;
  result.mode = "sc";
  result.decoder = dcfg;
  result.window = swcfg;
  result.window.window_blocks = W;
  result.has_window = true;
  result.chain_len = chain_len;
  result.seed = channel.seed;
  result.es_n0 = channel.es_n0;
  result.rate_used = rate;

  for (std::size_t si = 0; si < channel.snr_db.size(); ++si) {
    const double snr = channel.snr_db[si];
    const double sigma2 = noise_variance(snr, channel.es_n0, rate);
    const double sigma = std::sqrt(sigma2);
    const auto t0 = std::chrono::steady_clock::now();

    auto trial = [&](std::uint64_t idx) {
      TrialRng rng(channel.seed, idx);
      std::vector<double> llr(static_cast<std::size_t>(chain_len) * a);
      // all-zero transmission over the data blocks, known zero tail
      for (std::int64_t b = 0; b < data_blocks * a; ++b) {
        const double y = 1.0 + sigma * rng.gaussian();
        llr[static_cast<std::size_t>(b)] = 2.0 * y / sigma2;
      }
      for (std::int64_t b = data_blocks * a; b < chain_len * a; ++b) {
        llr[static_cast<std::size_t>(b)] = dcfg.llr_clip;
      }
      const DecodeOutcome out = sliding_window_decode(code, llr, chain_len, swcfg, dcfg);
      Tally t;
      t.bits = data_blocks * a;
      t.blocks = data_blocks;
      for (std::int64_t blk = 0; blk < data_blocks; ++blk) {
        std::int64_t errs = 0;
        for (int j = 0; j < a; ++j) {
          errs += out.bits[static_cast<std::size_t>(blk * a + j)] != 0;
        }
        t.bit_errors += errs;
        if (errs) ++t.block_errors;
      }
      t.iteration_sum = static_cast<std::int64_t>(out.iterations) * positions;
      t.iteration_units = positions;
      return t;
    };

    const Tally tally = run_waves(stop, opts, trial);
    SimPoint point;
    point.snr_db = snr;
    point.bits = tally.bits;
    point.bit_errors = tally.bit_errors;
    point.blocks = tally.blocks;
    point.block_errors = tally.block_errors;
    point.iteration_sum = tally.iteration_sum;
    point.iteration_units = tally.iteration_units;
    point.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    result.points.push_back(point);
  }
  return result;
}

void write_csv(const SimResult& result, std::ostream& out) {
  char buf[160];
  out << "# compactldpc simulation\n";
  out << "# code=" << (result.code_id.empty() ? "-" : result.code_id) << "\n";
  out << "# mode=" << result.mode << "\n";
  out << "# decoder=" << (result.decoder.algorithm == BpAlgorithm::sum_product ? "sum-product"
                                                                               : "min-sum")
      << " iters=" << result.decoder.max_iters
      << " early_stop=" << (result.decoder.early_stop ? "on" : "off");
  std::snprintf(buf, sizeof buf, " clip=%g", result.decoder.llr_clip);
  out << buf;
  if (result.decoder.algorithm == BpAlgorithm::min_sum) {
    std::snprintf(buf, sizeof buf, " scale=%g", result.decoder.min_sum_scale);
    out << buf;
  }
  out << "\n";
  if (result.has_window) {
    std::snprintf(buf, sizeof buf, "# window=%lld alpha=%g iters_per_position=%d\n",
                  static_cast<long long>(result.window.window_blocks), result.window.alpha,
                  result.window.iters_per_position);
    out << buf;
    out << "# chain_len=" << result.chain_len << "\n";
  }
  out << "# seed=" << result.seed << "\n";
  std::snprintf(buf, sizeof buf, "# snr=%s rate_used=%.6f sigma2=1/(2%s*10^(snr/10))\n",
                result.es_n0 ? "esn0" : "ebn0", result.rate_used,
                result.es_n0 ? "" : "*rate");
  out << buf;
  out << "snr_db,bits,bit_errors,blocks,block_errors,ber,bler,avg_iters\n";
  for (const SimPoint& p : result.points) {
    std::snprintf(buf, sizeof buf, "%g,%lld,%lld,%lld,%lld,%.6e,%.6e,%.4f\n", p.snr_db,
                  static_cast<long long>(p.bits), static_cast<long long>(p.bit_errors),
                  static_cast<long long>(p.blocks), static_cast<long long>(p.block_errors),
                  p.ber(), p.bler(), p.avg_iters());
    out << buf;
  }
}

std::string to_csv(const SimResult& result) {
  std::ostringstream os;
  write_csv(result, os);
  return os.str();
}

}  // namespace cldpc
