#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "cldpc/gf2.hpp"
#include "cldpc/simulate.hpp"
#include "cldpc/tanner.hpp"
#include "test_helpers.hpp"

using namespace cldpc;
using test::mk;

TEST_CASE("identical seeds give bitwise-identical results and CSV") {
  ChannelConfig channel;
  channel.snr_db = {2.0, 3.0};
  channel.seed = 99;
  DecoderConfig dcfg;
  dcfg.max_iters = 20;
  StopRule stop;
  stop.min_block_errors = 10;
  stop.max_bits = 40000;

  SimOptions serial;
  serial.threads = 1;
  SimOptions parallel;
  parallel.threads = 4;

  auto a = run_block_sim(test::table1_n4(), channel, dcfg, stop, serial);
  auto b = run_block_sim(test::table1_n4(), channel, dcfg, stop, serial);
  auto c = run_block_sim(test::table1_n4(), channel, dcfg, stop, parallel);
  CHECK(to_csv(a) == to_csv(b));
  CHECK(to_csv(a) == to_csv(c));  // thread count changes nothing observable
  // only the wall-time fields may differ between the runs
  for (auto* r : {&a, &b, &c}) {
    for (auto& p : r->points) p.elapsed_s = 0;
  }
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("sc simulation is deterministic under parallelism") {
  const ConvolutionalCode code(test::table5_a4());
  ChannelConfig channel;
  channel.snr_db = {3.0};
  channel.seed = 7;
  SlidingWindowConfig sw;
  sw.alpha = 1.0;
  sw.iters_per_position = 8;
  DecoderConfig dcfg;
  StopRule stop;
  stop.min_block_errors = 5;
  stop.max_bits = 30000;
  SimOptions serial;
  SimOptions parallel;
  parallel.threads = 3;
  const auto a = run_sc_sim(code, channel, sw, dcfg, 48, stop, serial);
  const auto b = run_sc_sim(code, channel, sw, dcfg, 48, stop, parallel);
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("high SNR leaves no residual errors") {
  ChannelConfig channel;
  channel.snr_db = {12.0};
  channel.seed = 5;
  DecoderConfig dcfg;
  StopRule stop;
  stop.min_block_errors = 0;
  stop.max_bits = 0;
  stop.max_blocks = 200;
  const auto r = run_block_sim(test::table1_n4(), channel, dcfg, stop);
  CHECK(r.points[0].bit_errors == 0);
  CHECK(r.points[0].blocks >= 200);
}

TEST_CASE("deep noise drives the raw channel toward half errors") {
  // at -40 dB the decoder input is essentially sign noise; one iteration of
  // BP cannot manufacture information, so the error ratio stays near 1/2
  ChannelConfig channel;
  channel.snr_db = {-40.0};
  channel.seed = 21;
  DecoderConfig dcfg;
  dcfg.max_iters = 1;
  dcfg.early_stop = false;
  StopRule stop;
  stop.min_block_errors = 0;
  stop.max_bits = 0;
  stop.max_blocks = 600;
  const auto r = run_block_sim(test::table1_n4(), channel, dcfg, stop);
  CHECK(r.points[0].ber() > 0.45);
  CHECK(r.points[0].ber() < 0.55);
}

TEST_CASE("encoder produces valid systematic codewords") {
  const auto h = expand_block(test::table1_n4());
  const auto plan = build_encoder(h);
  CHECK(plan.n == 148);
  CHECK(plan.k == 39);  // rank deficiency: table prints R=0.263
  CHECK(std::floor(1000.0 * static_cast<double>(plan.k) / static_cast<double>(plan.n)) == 263.0);

  std::vector<std::uint8_t> zero_msg(static_cast<std::size_t>(plan.k), 0);
  const auto zero_word = encode(plan, zero_msg);
  for (auto b : zero_word) CHECK(b == 0);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::uint8_t> msg(static_cast<std::size_t>(plan.k));
    for (auto& b : msg) b = rng() & 1;
    const auto word = encode(plan, msg);
    CHECK(syndrome_is_zero(h, word));
    // message bits are recoverable from their free positions
    for (std::size_t i = 0; i < plan.free_cols.size(); ++i) {
      CHECK(word[static_cast<std::size_t>(plan.free_cols[i])] == msg[i]);
    }
  }
  std::vector<std::uint8_t> wrong(static_cast<std::size_t>(plan.k) + 1, 0);
  CHECK_THROWS_AS(encode(plan, wrong), std::invalid_argument);
}

TEST_CASE("all-zero and random-codeword transmissions agree statistically") {
  const auto p = mk({{0, 0, 0, 0}, {0, 1, 3, 24}, {0, 27, 7, 19}}, 37);
  ChannelConfig channel;
  channel.snr_db = {2.0};
  channel.seed = 77;
  DecoderConfig dcfg;
  dcfg.max_iters = 25;
  StopRule stop;
  stop.min_block_errors = 0;
  stop.max_bits = 0;
  stop.max_blocks = 1500;
  SimOptions zero_opts;
  zero_opts.threads = 2;
  SimOptions rand_opts = zero_opts;
  rand_opts.transmit_random = true;

  const auto rz = run_block_sim(p, channel, dcfg, stop, zero_opts);
  ChannelConfig channel2 = channel;
  channel2.seed = 78;  // independent noise for the coded run
  const auto rr = run_block_sim(p, channel2, dcfg, stop, rand_opts);

  const double nz = static_cast<double>(rz.points[0].bits);
  const double pz = rz.points[0].ber();
  const double pr = rr.points[0].ber();
  const double sigma = std::sqrt(std::max(pz, 1e-9) * (1 - pz) / nz);
  CHECK(std::abs(pz - pr) <= 5.0 * sigma + 1e-9);
}

TEST_CASE("shared randomness makes the BER sweep monotone") {
  // the same noise realizations back every SNR point, so more signal energy
  // can only help
  const ConvolutionalCode code(test::table5_a4());
  ChannelConfig channel;
  channel.snr_db = {2.0, 2.5, 3.0};
  channel.seed = 2025;
  SlidingWindowConfig sw;
  sw.alpha = 2.0;
  sw.iters_per_position = 15;
  DecoderConfig dcfg;
  StopRule stop;
  stop.min_block_errors = 60;
  stop.max_bits = 500'000;
  SimOptions opts;
  opts.threads = 4;
  const auto r = run_sc_sim(code, channel, sw, dcfg, 120, stop, opts);
  REQUIRE(r.points.size() == 3);
  CHECK(r.points[0].ber() >= r.points[1].ber());
  CHECK(r.points[1].ber() >= r.points[2].ber());
  for (const auto& p : r.points) CHECK(p.block_errors >= 60);
}

TEST_CASE("csv format is stable and complete") {
  ChannelConfig channel;
  channel.snr_db = {1.0, 2.0, 3.0};
  channel.seed = 11;
  DecoderConfig dcfg;
  dcfg.max_iters = 5;
  StopRule stop;
  stop.min_block_errors = 2;
  stop.max_bits = 5000;
  auto r = run_block_sim(test::table1_n4(), channel, dcfg, stop);
  r.code_id = "table1-n4";
  const std::string csv = to_csv(r);
  CHECK(csv.find("# code=table1-n4\n") != std::string::npos);
  CHECK(csv.find("# seed=11\n") != std::string::npos);
  CHECK(csv.find("snr_db,bits,bit_errors,blocks,block_errors,ber,bler,avg_iters\n") !=
        std::string::npos);
  int rows = 0;
  for (std::size_t pos = 0; (pos = csv.find('\n', pos)) != std::string::npos; ++pos) ++rows;
  CHECK(rows == 7 + 3);  // 7 header/meta lines, one row per SNR point
}

TEST_CASE("simulation rejects empty SNR lists and short chains") {
  ChannelConfig channel;
  channel.seed = 1;
  CHECK_THROWS_AS(run_block_sim(test::table1_n4(), channel, DecoderConfig{}, StopRule{}),
                  std::invalid_argument);
  channel.snr_db = {1.0};
  const ConvolutionalCode code(test::table5_a4());
  CHECK_THROWS_AS(
      run_sc_sim(code, channel, SlidingWindowConfig{}, DecoderConfig{}, 11, StopRule{}),
      std::invalid_argument);  // chain not longer than the termination tail
}
