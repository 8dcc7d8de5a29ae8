// Command-line front end; talks to the toolkit exclusively through the C API.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "compactldpc.h"
#include "jsonio.hpp"

namespace {

using nlohmann::json;

#ifndef CLDPC_DEFAULT_CATALOG_DIR
#define CLDPC_DEFAULT_CATALOG_DIR "data/catalog"
#endif

struct MatrixHandle {
  cldpc_matrix* p = nullptr;
  MatrixHandle() = default;
  explicit MatrixHandle(cldpc_matrix* m) : p(m) {}
  MatrixHandle(const MatrixHandle&) = delete;
  MatrixHandle& operator=(const MatrixHandle&) = delete;
  MatrixHandle(MatrixHandle&& o) noexcept : p(o.p) { o.p = nullptr; }
  ~MatrixHandle() { cldpc_matrix_free(p); }
};

struct CatalogHandle {
  cldpc_catalog* p = nullptr;
  CatalogHandle() = default;
  CatalogHandle(const CatalogHandle&) = delete;
  ~CatalogHandle() { cldpc_catalog_free(p); }
};

int exit_code(cldpc_status s) {
  switch (s) {
    case CLDPC_OK: return 0;
    case CLDPC_ERR_INVALID_ARGUMENT:
    case CLDPC_ERR_PARSE:
    case CLDPC_ERR_OUT_OF_RANGE: return 2;
    default: return 1;
  }
}

[[noreturn]] void fail(cldpc_status s, const std::string& context) {
  std::cerr << "error: " << context << ": " << cldpc_status_string(s);
  const char* detail = cldpc_last_error();
  if (detail && *detail) std::cerr << " (" << detail << ")";
  std::cerr << "\n";
  std::exit(exit_code(s));
}

MatrixHandle read_matrix(const std::string& path) {
  MatrixHandle m;
  if (cldpc_status s = cldpc_matrix_read_file(path.c_str(), &m.p)) fail(s, "reading " + path);
  return m;
}

// The design constraints m < n <= N guard every subcommand that consumes a
// user-supplied block matrix.
void check_shape(const cldpc_matrix* m, const std::string& path) {
  const std::int32_t rows = cldpc_matrix_rows(m);
  const std::int32_t cols = cldpc_matrix_cols(m);
  const std::int64_t lifting = cldpc_matrix_lifting(m);
  if (rows >= cols) {
    std::cerr << "error: " << path << ": base matrix needs m < n (got " << rows << "x" << cols
              << ")\n";
    std::exit(2);
  }
  if (lifting != CLDPC_LIFTING_UNBOUNDED && lifting < cols) {
    std::cerr << "error: " << path << ": lifting degree " << lifting
              << " violates m < n <= N\n";
    std::exit(2);
  }
}

json matrix_to_json(const cldpc_matrix* m) {
  json rows = json::array();
  for (std::int32_t i = 0; i < cldpc_matrix_rows(m); ++i) {
    json row = json::array();
    for (std::int32_t j = 0; j < cldpc_matrix_cols(m); ++j) {
      std::int64_t v = 0;
      cldpc_matrix_entry(m, i, j, &v);
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  const std::int64_t lifting = cldpc_matrix_lifting(m);
  return json{{"rows", cldpc_matrix_rows(m)},
              {"cols", cldpc_matrix_cols(m)},
              {"lifting", lifting == CLDPC_LIFTING_UNBOUNDED ? json(nullptr) : json(lifting)},
              {"entries", std::move(rows)}};
}

void print_matrix(const cldpc_matrix* m) {
  for (std::int32_t i = 0; i < cldpc_matrix_rows(m); ++i) {
    for (std::int32_t j = 0; j < cldpc_matrix_cols(m); ++j) {
      std::int64_t v = 0;
      cldpc_matrix_entry(m, i, j, &v);
      std::cout << (j ? " " : "  ") << v;
    }
    std::cout << "\n";
  }
}

std::string default_catalog_dir() {
  if (const char* env = std::getenv("CLDPC_CATALOG_DIR")) return env;
  return CLDPC_DEFAULT_CATALOG_DIR;
}

std::vector<double> parse_snr(const std::string& spec) {
  std::vector<double> out;
  // a:b:step sweep, or a comma-separated list, or a single value
  const auto colon1 = spec.find(':');
  if (colon1 != std::string::npos) {
    const auto colon2 = spec.find(':', colon1 + 1);
    if (colon2 == std::string::npos) throw CLI::ValidationError("--snr expects a:b:step");
    const double a = std::stod(spec.substr(0, colon1));
    const double b = std::stod(spec.substr(colon1 + 1, colon2 - colon1 - 1));
    const double step = std::stod(spec.substr(colon2 + 1));
    if (step <= 0) throw CLI::ValidationError("--snr step must be positive");
    for (double v = a; v <= b + 1e-9; v += step) out.push_back(v);
    return out;
  }
  std::size_t pos = 0;
  while (pos < spec.size()) {
    const auto comma = spec.find(',', pos);
    out.push_back(std::stod(spec.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// ---- design -----------------------------------------------------------------

struct DesignArgs {
  int rows = 3, cols = 4, girth = 10;
  std::int64_t n_min = 0, n_max = 0;
  std::uint64_t budget = 0;
  double time_budget = 0.0;
  std::string emit;
  bool all = false;
  bool as_json = false;
};

json design_json(const cldpc_matrix* m, int achieved) {
  json j = matrix_to_json(m);
  j["N"] = cldpc_matrix_lifting(m);
  j["girth"] = achieved;
  // derive the SMC pieces for readability: column 1 is the seed, row 1 the gammas
  json p1 = json::array();
  for (std::int32_t i = 0; i < cldpc_matrix_rows(m); ++i) {
    std::int64_t v = 0;
    cldpc_matrix_entry(m, i, 1, &v);
    p1.push_back(v);
  }
  json gammas = json::array();
  for (std::int32_t jcol = 2; jcol < cldpc_matrix_cols(m); ++jcol) {
    std::int64_t v = 0;
    cldpc_matrix_entry(m, 1, jcol, &v);
    gammas.push_back(v);
  }
  j["p1"] = std::move(p1);
  j["gammas"] = std::move(gammas);
  return j;
}

void emit_matrix(const cldpc_matrix* m, const std::string& path, bool numbered) {
  std::string target = path;
  if (numbered) {
    const std::filesystem::path p(path);
    std::filesystem::path renamed = p.parent_path();
    renamed /= p.stem().string() + "_N" + std::to_string(cldpc_matrix_lifting(m)) +
               (p.has_extension() ? p.extension().string() : std::string(".txt"));
    target = renamed.string();
  }
  if (cldpc_status s = cldpc_matrix_write_file(m, target.c_str())) fail(s, "writing " + target);
  std::cerr << "wrote " << target << "\n";
}

int run_design(const DesignArgs& args) {
  cldpc_design_config cfg{};
  cfg.rows = args.rows;
  cfg.cols = args.cols;
  cfg.target_girth = args.girth;
  cfg.n_min = args.n_min > 0 ? args.n_min : args.cols;
  cfg.n_max = args.n_max;
  cfg.node_budget = args.budget;
  cfg.time_budget_s = args.time_budget;
  cldpc_design_stats stats{};

  auto report_one = [&](const cldpc_matrix* m, bool emit_numbered) {
    std::int32_t achieved = 0;
    cldpc_girth(m, 12, &achieved);
    if (args.as_json) {
      std::cout << design_json(m, achieved).dump() << "\n";
    } else {
      std::cout << "N=" << cldpc_matrix_lifting(m) << " girth=" << achieved
                << (achieved == 0 ? " (greater than 12)" : "") << "\n";
      print_matrix(m);
    }
    if (!args.emit.empty()) emit_matrix(m, args.emit, emit_numbered);
  };

  if (args.all) {
    struct Ctx {
      const DesignArgs* args;
      decltype(report_one)* report;
      int count = 0;
    } ctx{&args, &report_one, 0};
    const cldpc_status s = cldpc_design_all(
        &cfg,
        [](const cldpc_matrix* m, void* user) {
          Ctx* c = static_cast<Ctx*>(user);
          (*c->report)(m, true);
          ++c->count;
        },
        &ctx, &stats);
    if (s != CLDPC_OK) fail(s, "design search");
    std::cerr << ctx.count << " codes found, " << stats.nodes_used << " candidates checked\n";
    return 0;
  }

  MatrixHandle found;
  const cldpc_status s = cldpc_design(&cfg, &found.p, &stats);
  if (s != CLDPC_OK) fail(s, "design search");
  report_one(found.p, false);
  std::cerr << stats.nodes_used << " candidates checked\n";
  return 0;
}

// ---- verify -------------------------------------------------------------------

int run_verify(const std::string& file, int expected, int cap, bool as_json) {
  MatrixHandle m = read_matrix(file);
  check_shape(m.p, file);
  std::int32_t g = 0;
  if (cldpc_status s = cldpc_girth(m.p, cap, &g)) fail(s, "girth of " + file);
  const bool checked = expected > 0;
  const bool pass = !checked || g == expected;
  if (as_json) {
    json j{{"command", "verify"}, {"file", file},      {"cap", cap},
           {"girth", g},          {"pass", pass},      {"rows", cldpc_matrix_rows(m.p)},
           {"cols", cldpc_matrix_cols(m.p)}};
    if (checked) j["expected"] = expected;
    const std::int64_t lifting = cldpc_matrix_lifting(m.p);
    j["lifting"] = lifting == CLDPC_LIFTING_UNBOUNDED ? json(nullptr) : json(lifting);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << file << ": girth ";
    if (g == 0) {
      std::cout << "> " << cap;
    } else {
      std::cout << g;
    }
    if (checked) std::cout << (pass ? " [pass]" : " [FAIL]");
    std::cout << "\n";
  }
  return pass ? 0 : 1;
}

// ---- unwrap -------------------------------------------------------------------

int run_unwrap(const std::string& file, bool reduce, int cap, const std::string& emit,
               bool as_json) {
  MatrixHandle m = read_matrix(file);
  check_shape(m.p, file);
  MatrixHandle conv;
  cldpc_conv_info info{};
  if (cldpc_status s = cldpc_unwrap(m.p, reduce ? 1 : 0, cap, &conv.p, &info)) {
    fail(s, "unwrapping " + file);
  }
  if (as_json) {
    json j{{"command", "unwrap"},
           {"file", file},
           {"reduce_memory", reduce},
           {"memory_order", info.memory_order},
           {"constraint_length", info.constraint_length},
           {"rate", info.rate},
           {"girth_cap", cap},
           {"girth", info.girth},
           {"matrix", matrix_to_json(conv.p)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "m_h=" << info.memory_order << " v_s=" << info.constraint_length
              << " rate=" << info.rate << " girth=";
    if (info.girth == 0) {
      std::cout << ">" << cap;
    } else {
      std::cout << info.girth;
    }
    std::cout << "\n";
    print_matrix(conv.p);
  }
  if (!emit.empty()) {
    if (cldpc_status s = cldpc_matrix_write_file(conv.p, emit.c_str())) fail(s, "writing " + emit);
  }
  return 0;
}

// ---- simulate -----------------------------------------------------------------

struct SimulateArgs {
  std::string file;
  bool sc = false;
  double alpha = 5.0;
  std::int64_t window = 0;
  int iters = 100;
  std::string snr = "2.0";
  std::uint64_t seed = 1;
  std::int64_t stop_errors = 100;
  std::int64_t stop_bits = 10'000'000;
  std::int64_t stop_blocks = 0;
  std::int64_t chain_len = 0;
  int threads = 1;
  std::string algorithm = "sum-product";
  double scale = 0.75;
  bool es_n0 = false;
  bool random_data = false;
  bool no_early_stop = false;
  std::string out;
  bool as_json = false;
};

int run_simulate(const SimulateArgs& args) {
  MatrixHandle m = read_matrix(args.file);
  check_shape(m.p, args.file);
  const std::vector<double> snrs = parse_snr(args.snr);
  const std::string code_id = std::filesystem::path(args.file).stem().string();

  cldpc_sim_config cfg{};
  cfg.mode = args.sc ? CLDPC_SIM_SC : CLDPC_SIM_BLOCK;
  cfg.algorithm = args.algorithm == "min-sum" ? CLDPC_BP_MIN_SUM : CLDPC_BP_SUM_PRODUCT;
  cfg.max_iters = args.iters;
  cfg.early_stop = args.no_early_stop ? 0 : 1;
  cfg.llr_clip = 25.0;
  cfg.min_sum_scale = args.scale;
  cfg.alpha = args.alpha;
  cfg.window_blocks = args.window;
  cfg.iters_per_position = args.iters;
  cfg.chain_len_blocks = args.chain_len;
  cfg.snr_db = snrs.data();
  cfg.snr_count = snrs.size();
  cfg.es_n0 = args.es_n0 ? 1 : 0;
  cfg.seed = args.seed;
  cfg.stop_block_errors = args.stop_errors;
  cfg.stop_max_bits = args.stop_bits;
  cfg.stop_max_blocks = args.stop_blocks;
  cfg.threads = args.threads;
  cfg.transmit_random = args.random_data ? 1 : 0;
  cfg.code_id = code_id.c_str();

  std::vector<cldpc_sim_point> points(snrs.size());
  double rate_used = 0.0;
  std::int64_t window_blocks = 0;
  const cldpc_status s =
      cldpc_simulate(m.p, &cfg, points.data(), args.out.empty() ? nullptr : args.out.c_str(),
                     &rate_used, &window_blocks);
  if (s != CLDPC_OK) fail(s, "simulating " + args.file);

  if (args.as_json) {
    cldpc_cli::SimResultView view;
    view.code_id = code_id;
    view.mode = args.sc ? "sc" : "block";
    view.algorithm = args.algorithm;
    view.max_iters = args.iters;
    view.early_stop = !args.no_early_stop && !args.sc;
    view.llr_clip = cfg.llr_clip;
    view.min_sum_scale = args.scale;
    view.alpha = args.alpha;
    view.window_blocks = window_blocks;
    view.iters_per_position = args.sc ? args.iters : 0;
    view.chain_len = args.sc ? args.chain_len : 0;
    view.seed = args.seed;
    view.snr_convention = args.es_n0 ? "esn0" : "ebn0";
    view.rate_used = rate_used;
    for (const auto& p : points) view.points.push_back(cldpc_cli::to_view(p));
    std::cout << json(view).dump() << "\n";
  } else {
    std::printf("# code=%s rate_used=%.6f%s\n", code_id.c_str(), rate_used,
                args.sc ? (" W=" + std::to_string(window_blocks)).c_str() : "");
    std::printf("%8s %12s %10s %10s %12s %10s\n", "snr_db", "bits", "blocks", "blk_err", "ber",
                "bler");
    for (const auto& p : points) {
      std::printf("%8.3f %12lld %10lld %10lld %12.4e %10.4e\n", p.snr_db,
                  static_cast<long long>(p.bits), static_cast<long long>(p.blocks),
                  static_cast<long long>(p.block_errors), p.ber, p.bler);
    }
  }
  if (!args.out.empty()) std::cerr << "wrote " << args.out << "\n";
  return 0;
}

// ---- metrics -----------------------------------------------------------------

struct MetricsArgs {
  std::string file;
  std::string compare;
  double alpha = 5.0;
  double iavg = 1.0;
  bool design_rate = false;
  bool as_json = false;
};

cldpc_cli::LatencyReportView report_for(const std::string& file, const MetricsArgs& args) {
  MatrixHandle m = read_matrix(file);
  check_shape(m.p, file);
  const std::int32_t rows = cldpc_matrix_rows(m.p);
  const std::int32_t cols = cldpc_matrix_cols(m.p);
  const std::int64_t lifting = cldpc_matrix_lifting(m.p);

  cldpc_cli::LatencyReportView v;
  v.i_avg = args.iavg;
  if (lifting != CLDPC_LIFTING_UNBOUNDED) {
    double rate = static_cast<double>(cols - rows) / cols;
    if (!args.design_rate) {
      if (cldpc_status s = cldpc_effective_rate(m.p, &rate, nullptr)) {
        fail(s, "effective rate of " + file);
      }
    }
    double latency = 0.0, complexity = 0.0;
    if (cldpc_status s =
            cldpc_metrics_bp(cols, lifting, rows, rate, args.iavg, &latency, &complexity)) {
      fail(s, "metrics of " + file);
    }
    v.scheme = "bp";
    v.latency_bits = latency;
    v.per_bit_complexity = complexity;
    v.n = cols;
    v.lifting = lifting;
    v.m = rows;
    v.rate = rate;
  } else {
    cldpc_conv_info info{};
    if (cldpc_status s = cldpc_unwrap(m.p, 0, 12, nullptr, &info)) fail(s, "unwrap of " + file);
    double latency = 0.0, complexity = 0.0;
    if (cldpc_status s = cldpc_metrics_sw(cols, rows, info.memory_order, args.alpha, info.rate,
                                          args.iavg, &latency, &complexity)) {
      fail(s, "metrics of " + file);
    }
    v.scheme = "sw";
    v.latency_bits = latency;
    v.per_bit_complexity = complexity;
    v.a = cols;
    v.c = rows;
    v.memory_order = info.memory_order;
    v.alpha = args.alpha;
    v.rate = info.rate;
  }
  return v;
}

void print_report(const std::string& file, const cldpc_cli::LatencyReportView& v) {
  std::printf("%s [%s]\n", file.c_str(), v.scheme.c_str());
  std::printf("  latency      %12.1f bits\n", v.latency_bits);
  std::printf("  complexity   %12.1f ops/bit (I_avg=%g, user-supplied)\n", v.per_bit_complexity, v.i_avg);
  if (v.scheme == "bp") {
    std::printf("  n=%lld N=%lld m=%lld rate=%.4f\n", static_cast<long long>(v.n),
                static_cast<long long>(v.lifting), static_cast<long long>(v.m), v.rate);
  } else {
    std::printf("  a=%lld c=%lld m_h=%lld alpha=%g rate=%.4f\n", static_cast<long long>(v.a),
                static_cast<long long>(v.c), static_cast<long long>(v.memory_order), v.alpha,
                v.rate);
  }
}

int run_metrics(const MetricsArgs& args) {
  const auto first = report_for(args.file, args);
  json j{{"command", "metrics"}, {"report", first}};
  if (!args.as_json) print_report(args.file, first);

  if (!args.compare.empty()) {
    const auto second = report_for(args.compare, args);
    if (!args.as_json) print_report(args.compare, second);
    if (first.scheme != second.scheme) {
      std::cerr << "error: cannot compare a block code against a convolutional code\n";
      return 2;
    }
    double theta = 0.0;
    if (first.scheme == "bp") {
      if (cldpc_status s = cldpc_theta_n(first.lifting, second.lifting, &theta)) {
        fail(s, "theta");
      }
      if (!args.as_json) std::printf("theta_N = %.4f\n", theta);
      j["theta_n"] = theta;
    } else {
      if (cldpc_status s = cldpc_theta_mh(first.memory_order, second.memory_order, &theta)) {
        fail(s, "theta");
      }
      if (!args.as_json) std::printf("theta_mh = %.4f\n", theta);
      j["theta_mh"] = theta;
    }
    j["compare"] = second;
  }
  if (args.as_json) std::cout << j.dump() << "\n";
  return 0;
}

// ---- catalog -----------------------------------------------------------------

int run_catalog(const std::string& action, const std::string& dir, const std::string& id,
                const std::string& out_path, bool skip_rate, bool as_json) {
  CatalogHandle cat;
  if (cldpc_status s = cldpc_catalog_open(dir.c_str(), &cat.p)) fail(s, "opening catalog " + dir);
  const std::size_t count = cldpc_catalog_size(cat.p);

  auto indices = [&] {
    std::vector<std::size_t> idx;
    if (id.empty()) {
      for (std::size_t i = 0; i < count; ++i) idx.push_back(i);
    } else {
      std::size_t i = 0;
      if (cldpc_status s = cldpc_catalog_find(cat.p, id.c_str(), &i)) fail(s, "entry " + id);
      idx.push_back(i);
    }
    return idx;
  }();

  if (action == "list") {
    json items = json::array();
    for (std::size_t i : indices) {
      cldpc_catalog_entry_info info{};
      cldpc_catalog_entry(cat.p, i, &info);
      if (as_json) {
        json e{{"id", info.id},
               {"kind", info.kind},
               {"table", info.table},
               {"rows", info.rows},
               {"cols", info.cols},
               {info.kind == std::string("block") ? "N" : "mh", info.lifting_or_memory},
               {"girth", info.girth}};
        if (info.rate >= 0) e["rate"] = info.rate;
        if (info.competitor >= 0) {
          e["competitor"] = json{{"value", info.competitor}, {"citation", info.citation}};
        }
        items.push_back(std::move(e));
      } else {
        std::printf("%-12s %-20s %lldx%-4lld %s=%-6lld girth=%d", info.id, info.kind,
                    static_cast<long long>(info.rows), static_cast<long long>(info.cols),
                    info.kind == std::string("block") ? "N" : "mh",
                    static_cast<long long>(info.lifting_or_memory), info.girth);
        if (info.competitor >= 0) {
          std::printf("  best-known=%lld [%s]", static_cast<long long>(info.competitor),
                      info.citation);
        }
        std::printf("\n");
      }
    }
    if (as_json) std::cout << json{{"command", "catalog-list"}, {"entries", items}}.dump() << "\n";
    return 0;
  }

  if (action == "verify") {
    int failures = 0;
    json items = json::array();
    for (std::size_t i : indices) {
      cldpc_catalog_entry_info info{};
      cldpc_catalog_entry(cat.p, i, &info);
      cldpc_verify_report report{};
      if (cldpc_status s = cldpc_catalog_verify(cat.p, i, skip_rate ? 0 : 1, &report)) {
        fail(s, std::string("verifying ") + info.id);
      }
      if (!report.pass) ++failures;
      if (as_json) {
        items.push_back(json{{"id", info.id},
                             {"pass", report.pass != 0},
                             {"girth_found", report.girth_found},
                             {"rate_checked", report.rate_checked != 0},
                             {"rate_computed", report.rate_computed},
                             {"rate_matches", report.rate_matches != 0},
                             {"detail", report.detail}});
      } else {
        std::printf("[%s] %-12s %s\n", report.pass ? "ok" : "FAIL", info.id, report.detail);
      }
    }
    if (as_json) {
      std::cout << json{{"command", "catalog-verify"},
                        {"failures", failures},
                        {"entries", items}}
                       .dump()
                << "\n";
    } else {
      std::printf("%zu entries, %d failures\n", indices.size(), failures);
    }
    return failures == 0 ? 0 : 1;
  }

  if (action == "export") {
    if (id.empty() || out_path.empty()) {
      std::cerr << "error: catalog export needs --id and --out\n";
      return 2;
    }
    MatrixHandle m;
    if (cldpc_status s = cldpc_catalog_matrix(cat.p, indices[0], &m.p)) fail(s, "entry " + id);
    if (cldpc_status s = cldpc_matrix_write_file(m.p, out_path.c_str())) {
      fail(s, "writing " + out_path);
    }
    std::cerr << "wrote " << out_path << "\n";
    return 0;
  }

  std::cerr << "error: unknown catalog action '" << action << "' (list, verify, export)\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compact QC/SC-LDPC code design and evaluation toolkit"};
  app.require_subcommand(1);

  // design
  DesignArgs design;
  CLI::App* cmd_design = app.add_subcommand("design", "search for an SMC exponent matrix");
  cmd_design->add_option("--rows", design.rows, "base matrix rows m")->required();
  cmd_design->add_option("--cols", design.cols, "base matrix columns n")->required();
  cmd_design->add_option("--girth", design.girth, "target girth (6, 8, 10, 12)")->required();
  cmd_design->add_option("--n-min", design.n_min, "smallest lifting degree to try");
  cmd_design->add_option("--n-max", design.n_max, "largest lifting degree to try")->required();
  cmd_design->add_option("--budget", design.budget, "candidate-check budget (0 = unlimited)");
  cmd_design->add_option("--time-budget", design.time_budget, "wall-clock budget in seconds");
  cmd_design->add_option("--emit", design.emit, "write the found matrix to this file");
  cmd_design->add_flag("--all", design.all, "emit every success in the range, not just the first");
  cmd_design->add_flag("--json", design.as_json, "machine-readable output");

  // verify
  std::string verify_file;
  int verify_girth = 0, verify_cap = 12;
  bool verify_json = false;
  CLI::App* cmd_verify = app.add_subcommand("verify", "compute or check the girth of a matrix file");
  cmd_verify->add_option("--file", verify_file, "exponent-matrix file")->required();
  cmd_verify->add_option("--girth", verify_girth, "expected girth (enables pass/fail)");
  cmd_verify->add_option("--cap", verify_cap, "search cap (even, 4..12)");
  cmd_verify->add_flag("--json", verify_json, "machine-readable output");

  // unwrap
  std::string unwrap_file, unwrap_emit;
  bool unwrap_reduce = false, unwrap_json = false;
  int unwrap_cap = 12;
  CLI::App* cmd_unwrap =
      app.add_subcommand("unwrap", "reinterpret a block code as a convolutional code");
  cmd_unwrap->add_option("--file", unwrap_file, "exponent-matrix file")->required();
  cmd_unwrap->add_flag("--reduce-memory", unwrap_reduce,
                       "search offsets that shrink the memory order");
  cmd_unwrap->add_option("--emit", unwrap_emit, "write the convolutional matrix to this file");
  cmd_unwrap->add_option("--cap", unwrap_cap, "girth search cap");
  cmd_unwrap->add_flag("--json", unwrap_json, "machine-readable output");

  // simulate
  SimulateArgs sim;
  CLI::App* cmd_sim = app.add_subcommand("simulate", "Monte Carlo BER/BLER over BPSK/AWGN");
  cmd_sim->add_option("--file", sim.file, "exponent-matrix file")->required();
  cmd_sim->add_flag("--sc", sim.sc, "sliding-window decode the convolutional reading");
  cmd_sim->add_flag("--block", [](std::int64_t) {}, "full-block decode (default)");
  cmd_sim->add_option("--alpha", sim.alpha, "window factor W = alpha (m_h+1)");
  cmd_sim->add_option("--window", sim.window, "explicit window size in blocks");
  cmd_sim->add_option("--iters", sim.iters, "decoder iterations (per window position for --sc)");
  cmd_sim->add_option("--snr", sim.snr, "SNR points: a:b:step or comma list")->required();
  cmd_sim->add_option("--seed", sim.seed, "simulation seed");
  cmd_sim->add_option("--stop-errors", sim.stop_errors, "stop after this many block errors");
  cmd_sim->add_option("--stop-bits", sim.stop_bits, "stop after this many bits");
  cmd_sim->add_option("--stop-blocks", sim.stop_blocks, "stop after this many blocks");
  cmd_sim->add_option("--chain-len", sim.chain_len, "chain length in blocks (--sc)");
  cmd_sim->add_option("--threads", sim.threads, "worker threads (results are unaffected)");
  cmd_sim->add_option("--algorithm", sim.algorithm, "sum-product or min-sum")
      ->check(CLI::IsMember({"sum-product", "min-sum"}));
  cmd_sim->add_option("--scale", sim.scale, "min-sum normalization factor");
  cmd_sim->add_flag("--esn0", sim.es_n0, "interpret SNR points as Es/N0 instead of Eb/N0");
  cmd_sim->add_flag("--random-data", sim.random_data, "encode random messages (block mode)");
  cmd_sim->add_flag("--no-early-stop", sim.no_early_stop, "disable the syndrome stop rule");
  cmd_sim->add_option("--out", sim.out, "write CSV to this file");
  cmd_sim->add_flag("--json", sim.as_json, "machine-readable output");

  // metrics
  MetricsArgs metrics;
  CLI::App* cmd_metrics =
      app.add_subcommand("metrics", "decoding latency/complexity of one or two codes");
  cmd_metrics->add_option("--file", metrics.file, "exponent-matrix file")->required();
  cmd_metrics->add_option("--compare", metrics.compare, "second file for improvement ratios");
  cmd_metrics->add_option("--alpha", metrics.alpha, "window factor for convolutional codes");
  cmd_metrics->add_option("--iavg", metrics.iavg, "average decoder iterations");
  cmd_metrics->add_flag("--design-rate", metrics.design_rate,
                        "use (n-m)/n instead of the effective rate");
  cmd_metrics->add_flag("--json", metrics.as_json, "machine-readable output");

  // catalog
  std::string cat_action = "list", cat_dir = default_catalog_dir(), cat_id, cat_out;
  bool cat_skip_rate = false, cat_json = false;
  CLI::App* cmd_catalog = app.add_subcommand("catalog", "published-code catalog operations");
  cmd_catalog->add_option("action", cat_action, "list, verify or export");
  cmd_catalog->add_option("--dir", cat_dir, "catalog directory");
  cmd_catalog->add_option("--id", cat_id, "restrict to one entry");
  cmd_catalog->add_option("--out", cat_out, "output file for export");
  cmd_catalog->add_flag("--skip-rate", cat_skip_rate, "skip the effective-rate recomputation");
  cmd_catalog->add_flag("--json", cat_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_design->parsed()) return run_design(design);
    if (cmd_verify->parsed()) return run_verify(verify_file, verify_girth, verify_cap, verify_json);
    if (cmd_unwrap->parsed()) {
      return run_unwrap(unwrap_file, unwrap_reduce, unwrap_cap, unwrap_emit, unwrap_json);
    }
    if (cmd_sim->parsed()) return run_simulate(sim);
    if (cmd_metrics->parsed()) return run_metrics(metrics);
    if (cmd_catalog->parsed()) {
      return run_catalog(cat_action, cat_dir, cat_id, cat_out, cat_skip_rate, cat_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
