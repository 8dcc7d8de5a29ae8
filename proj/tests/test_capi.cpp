#include <doctest.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "compactldpc.h"

namespace {

struct Matrix {
  cldpc_matrix* p = nullptr;
  ~Matrix() { cldpc_matrix_free(p); }
};

struct Catalog {
  cldpc_catalog* p = nullptr;
  ~Catalog() { cldpc_catalog_free(p); }
};

Matrix table1_n4() {
  const std::array<std::int64_t, 12> entries{0, 0, 0, 0, 0, 1, 3, 24, 0, 27, 7, 19};
  Matrix m;
  REQUIRE(cldpc_matrix_create(3, 4, entries.data(), 37, &m.p) == CLDPC_OK);
  return m;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("library identity and status strings") {
  CHECK(std::string(cldpc_version()) == "1.0.0");
  CHECK(std::string(cldpc_status_string(CLDPC_OK)) == "ok");
  CHECK(std::string(cldpc_status_string(CLDPC_ERR_PARSE)) == "parse error");
}

TEST_CASE("matrix lifecycle and accessors") {
  Matrix m = table1_n4();
  CHECK(cldpc_matrix_rows(m.p) == 3);
  CHECK(cldpc_matrix_cols(m.p) == 4);
  CHECK(cldpc_matrix_lifting(m.p) == 37);
  std::int64_t v = -1;
  CHECK(cldpc_matrix_entry(m.p, 2, 1, &v) == CLDPC_OK);
  CHECK(v == 27);
  CHECK(cldpc_matrix_entry(m.p, 3, 0, &v) == CLDPC_ERR_OUT_OF_RANGE);
  CHECK(std::string(cldpc_last_error()).find("out of range") != std::string::npos);

  const char* path = "/tmp/cldpc_capi_matrix.txt";
  CHECK(cldpc_matrix_write_file(m.p, path) == CLDPC_OK);
  Matrix back;
  CHECK(cldpc_matrix_read_file(path, &back.p) == CLDPC_OK);
  CHECK(cldpc_matrix_lifting(back.p) == 37);
  std::remove(path);

  Matrix missing;
  CHECK(cldpc_matrix_read_file("/tmp/does_not_exist_cldpc.txt", &missing.p) == CLDPC_ERR_IO);

  const std::int64_t bad_entry[] = {50};
  Matrix bad;
  CHECK(cldpc_matrix_create(1, 1, bad_entry, 37, &bad.p) == CLDPC_ERR_INVALID_ARGUMENT);
  CHECK(cldpc_matrix_create(1, 1, nullptr, 37, &bad.p) == CLDPC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("girth and effective rate") {
  Matrix m = table1_n4();
  std::int32_t g = 0;
  CHECK(cldpc_girth(m.p, 12, &g) == CLDPC_OK);
  CHECK(g == 10);
  CHECK(cldpc_girth(m.p, 8, &g) == CLDPC_OK);
  CHECK(g == 0);  // greater than cap
  CHECK(cldpc_girth(m.p, 13, &g) == CLDPC_ERR_INVALID_ARGUMENT);

  double rate = 0.0;
  std::int64_t k = 0;
  CHECK(cldpc_effective_rate(m.p, &rate, &k) == CLDPC_OK);
  CHECK(k == 39);
  CHECK(rate == doctest::Approx(39.0 / 148.0));
}

TEST_CASE("design finds the published minimal lifting degree") {
  cldpc_design_config cfg{};
  cfg.rows = 3;
  cfg.cols = 4;
  cfg.target_girth = 10;
  cfg.n_min = 4;
  cfg.n_max = 40;
  Matrix found;
  cldpc_design_stats stats{};
  CHECK(cldpc_design(&cfg, &found.p, &stats) == CLDPC_OK);
  CHECK(cldpc_matrix_lifting(found.p) == 37);
  CHECK(stats.nodes_used > 0);
  std::int32_t g = 0;
  CHECK(cldpc_girth(found.p, 12, &g) == CLDPC_OK);
  CHECK(g == 10);

  cfg.n_max = 20;  // nothing this small exists
  Matrix none;
  CHECK(cldpc_design(&cfg, &none.p, &stats) == CLDPC_ERR_SEARCH_FAILED);

  cfg.n_max = 40;
  cfg.node_budget = 30;
  CHECK(cldpc_design(&cfg, &none.p, &stats) == CLDPC_ERR_BUDGET_EXHAUSTED);
  CHECK(stats.budget_exhausted == 1);
}

TEST_CASE("design_all streams every success in the scan range") {
  cldpc_design_config cfg{};
  cfg.rows = 2;
  cfg.cols = 3;
  cfg.target_girth = 6;
  cfg.n_min = 3;
  cfg.n_max = 5;
  std::vector<std::int64_t> liftings;
  auto sink = [](const cldpc_matrix* m, void* user) {
    static_cast<std::vector<std::int64_t>*>(user)->push_back(cldpc_matrix_lifting(m));
  };
  cldpc_design_stats stats{};
  CHECK(cldpc_design_all(&cfg, sink, &liftings, &stats) == CLDPC_OK);
  CHECK(!liftings.empty());
  for (std::size_t i = 1; i < liftings.size(); ++i) CHECK(liftings[i - 1] <= liftings[i]);
  CHECK(liftings.front() == 3);
}

TEST_CASE("unwrap reports the convolutional parameters") {
  Matrix m = table1_n4();
  Matrix conv;
  cldpc_conv_info info{};
  CHECK(cldpc_unwrap(m.p, 0, 12, &conv.p, &info) == CLDPC_OK);
  CHECK(info.memory_order == 27);
  CHECK(info.constraint_length == 28 * 4);
  CHECK(info.rate == doctest::Approx(0.25));
  CHECK(info.girth >= 10);
  CHECK(cldpc_matrix_lifting(conv.p) == CLDPC_LIFTING_UNBOUNDED);

  cldpc_conv_info reduced{};
  CHECK(cldpc_unwrap(m.p, 1, 12, nullptr, &reduced) == CLDPC_OK);
  CHECK(reduced.memory_order <= info.memory_order);
  CHECK(reduced.girth == info.girth);
}

TEST_CASE("metric helpers round numbers exactly") {
  double out = 0.0;
  CHECK(cldpc_f_complexity(4, 0.5, &out) == CLDPC_OK);
  CHECK(out == doctest::Approx(220.0));
  CHECK(cldpc_f_complexity(0, 0.5, &out) == CLDPC_ERR_INVALID_ARGUMENT);

  double latency = 0.0, complexity = 0.0;
  CHECK(cldpc_metrics_bp(4, 37, 3, 0.263, 10.0, &latency, &complexity) == CLDPC_OK);
  CHECK(latency == 148.0);
  CHECK(cldpc_metrics_sw(8, 3, 297, 5.0, 0.625, 100.0, &latency, &complexity) == CLDPC_OK);
  CHECK(latency == 11920.0);

  CHECK(cldpc_theta_mh(297, 652, &out) == CLDPC_OK);
  CHECK(out == doctest::Approx(0.4563).epsilon(2e-4));
  CHECK(cldpc_theta_n(139, 145, &out) == CLDPC_OK);
  CHECK(out == doctest::Approx(0.9586).epsilon(1e-4));
}

TEST_CASE("simulation through the C surface is deterministic") {
  Matrix m = table1_n4();
  const double snrs[] = {2.0, 4.0};
  cldpc_sim_config cfg{};
  cfg.mode = CLDPC_SIM_BLOCK;
  cfg.algorithm = CLDPC_BP_SUM_PRODUCT;
  cfg.max_iters = 15;
  cfg.early_stop = 1;
  cfg.snr_db = snrs;
  cfg.snr_count = 2;
  cfg.seed = 77;
  cfg.stop_block_errors = 12;
  cfg.stop_max_bits = 60000;
  cfg.threads = 1;
  cfg.code_id = "capi-test";

  std::vector<cldpc_sim_point> a(2), b(2);
  const char* csv1 = "/tmp/cldpc_capi_sim1.csv";
  const char* csv2 = "/tmp/cldpc_capi_sim2.csv";
  double rate = 0.0;
  CHECK(cldpc_simulate(m.p, &cfg, a.data(), csv1, &rate, nullptr) == CLDPC_OK);
  cfg.threads = 4;
  CHECK(cldpc_simulate(m.p, &cfg, b.data(), csv2, &rate, nullptr) == CLDPC_OK);
  CHECK(rate == doctest::Approx(39.0 / 148.0));
  for (int i = 0; i < 2; ++i) {
    CHECK(a[i].bits == b[i].bits);
    CHECK(a[i].bit_errors == b[i].bit_errors);
    CHECK(a[i].block_errors == b[i].block_errors);
  }
  CHECK(slurp(csv1) == slurp(csv2));
  CHECK(slurp(csv1).find("snr_db,bits,bit_errors,blocks,block_errors,ber,bler,avg_iters") !=
        std::string::npos);
  std::remove(csv1);
  std::remove(csv2);

  cfg.snr_count = 0;
  CHECK(cldpc_simulate(m.p, &cfg, a.data(), nullptr, nullptr, nullptr) ==
        CLDPC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sc simulation unwraps finite matrices on the fly") {
  Matrix m = table1_n4();
  const double snrs[] = {3.0};
  cldpc_sim_config cfg{};
  cfg.mode = CLDPC_SIM_SC;
  cfg.alpha = 1.0;
  cfg.iters_per_position = 5;
  cfg.max_iters = 5;
  cfg.chain_len_blocks = 60;
  cfg.snr_db = snrs;
  cfg.snr_count = 1;
  cfg.seed = 5;
  cfg.stop_block_errors = 5;
  cfg.stop_max_bits = 20000;
  cfg.threads = 2;
  cldpc_sim_point point{};
  std::int64_t window = 0;
  CHECK(cldpc_simulate(m.p, &cfg, &point, nullptr, nullptr, &window) == CLDPC_OK);
  CHECK(window == 28);  // alpha (m_h + 1) with m_h = 27
  CHECK(point.blocks > 0);
}

TEST_CASE("catalog access through the C surface") {
  Catalog cat;
  REQUIRE(cldpc_catalog_open(CLDPC_CATALOG_DIR, &cat.p) == CLDPC_OK);
  CHECK(cldpc_catalog_size(cat.p) == 58);

  std::size_t idx = 0;
  CHECK(cldpc_catalog_find(cat.p, "table5-a4", &idx) == CLDPC_OK);
  cldpc_catalog_entry_info info{};
  CHECK(cldpc_catalog_entry(cat.p, idx, &info) == CLDPC_OK);
  CHECK(std::string(info.kind) == "convolutional");
  CHECK(info.lifting_or_memory == 11);
  CHECK(info.girth == 10);
  CHECK(info.competitor == 10);
  CHECK(info.has_matrix == 1);

  Matrix m;
  CHECK(cldpc_catalog_matrix(cat.p, idx, &m.p) == CLDPC_OK);
  CHECK(cldpc_matrix_rows(m.p) == 3);
  CHECK(cldpc_matrix_cols(m.p) == 4);

  cldpc_verify_report report{};
  CHECK(cldpc_catalog_verify(cat.p, idx, 0, &report) == CLDPC_OK);
  CHECK(report.pass == 1);
  CHECK(report.girth_found == 10);

  CHECK(cldpc_catalog_find(cat.p, "no-such-id", &idx) == CLDPC_ERR_OUT_OF_RANGE);
  CHECK(cldpc_catalog_entry(cat.p, 10'000, &info) == CLDPC_ERR_OUT_OF_RANGE);

  // the parameter-only comparison code has no stored matrix
  CHECK(cldpc_catalog_find(cat.p, "table9-C2", &idx) == CLDPC_OK);
  Matrix none;
  CHECK(cldpc_catalog_matrix(cat.p, idx, &none.p) == CLDPC_ERR_INVALID_ARGUMENT);

  Catalog bad;
  CHECK(cldpc_catalog_open("/tmp/not_a_catalog_dir", &bad.p) == CLDPC_ERR_IO);
}
