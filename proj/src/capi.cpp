#include "compactldpc.h"

#include <cstring>
#include <fstream>
#include <string>

#include "cldpc/catalog.hpp"
#include "cldpc/coupled.hpp"
#include "cldpc/cycles.hpp"
#include "cldpc/errors.hpp"
#include "cldpc/gf2.hpp"
#include "cldpc/metrics.hpp"
#include "cldpc/simulate.hpp"
#include "cldpc/smc.hpp"
#include "cldpc/tanner.hpp"

struct cldpc_matrix {
  cldpc::ExponentMatrix m;
};

struct cldpc_catalog {
  std::vector<cldpc::CatalogEntry> entries;
  // stable "kind" strings handed out via entry info
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& what) { g_last_error = what; }

template <typename Fn>
cldpc_status wrap(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return CLDPC_ERR_INVALID_ARGUMENT;
  } catch (const cldpc::ParseError& e) {
    set_error(e.what());
    return CLDPC_ERR_PARSE;
  } catch (const cldpc::IoError& e) {
    set_error(e.what());
    return CLDPC_ERR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return CLDPC_ERR_INTERNAL;
  }
}

cldpc_status require(bool ok, const char* what) {
  if (!ok) {
    set_error(what);
    return CLDPC_ERR_INVALID_ARGUMENT;
  }
  return CLDPC_OK;
}

const char* kind_string(cldpc::CatalogKind k) {
  switch (k) {
    case cldpc::CatalogKind::block: return "block";
    case cldpc::CatalogKind::convolutional: return "convolutional";
    case cldpc::CatalogKind::convolutional_params: return "convolutional-params";
  }
  return "unknown";
}

cldpc::SmcSearchConfig to_config(const cldpc_design_config& c) {
  cldpc::SmcSearchConfig cfg;
  cfg.rows = c.rows;
  cfg.cols = c.cols;
  cfg.target_girth = c.target_girth;
  cfg.n_min = c.n_min;
  cfg.n_max = c.n_max;
  cfg.node_budget = c.node_budget;
  cfg.time_budget_s = c.time_budget_s;
  return cfg;
}

void fill_stats(cldpc_design_stats* stats, const cldpc::SmcSearchOutcome& out) {
  if (!stats) return;
  stats->nodes_used = out.nodes_used;
  stats->last_n_completed = out.last_n_completed;
  stats->budget_exhausted = out.budget_exhausted ? 1 : 0;
}

}  // namespace

extern "C" {

const char* cldpc_version(void) { return "1.0.0"; }

const char* cldpc_status_string(cldpc_status status) {
  switch (status) {
    case CLDPC_OK: return "ok";
    case CLDPC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CLDPC_ERR_IO: return "i/o error";
    case CLDPC_ERR_PARSE: return "parse error";
    case CLDPC_ERR_SEARCH_FAILED: return "search failed";
    case CLDPC_ERR_BUDGET_EXHAUSTED: return "budget exhausted";
    case CLDPC_ERR_OUT_OF_RANGE: return "out of range";
    case CLDPC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cldpc_last_error(void) { return g_last_error.c_str(); }

cldpc_status cldpc_matrix_create(int32_t rows, int32_t cols, const int64_t* entries,
                                 int64_t lifting, cldpc_matrix** out) {
  if (cldpc_status s = require(out && entries, "null output or entries")) return s;
  return wrap([&] {
    std::vector<std::int64_t> e(entries, entries + static_cast<std::size_t>(rows) * cols);
    *out = new cldpc_matrix{cldpc::ExponentMatrix(rows, cols, std::move(e), lifting)};
    return CLDPC_OK;
  });
}

cldpc_status cldpc_matrix_read_file(const char* path, cldpc_matrix** out) {
  if (cldpc_status s = require(out && path, "null path or output")) return s;
  return wrap([&] {
    *out = new cldpc_matrix{cldpc::read_exponent_matrix_file(path)};
    return CLDPC_OK;
  });
}

cldpc_status cldpc_matrix_write_file(const cldpc_matrix* m, const char* path) {
  if (cldpc_status s = require(m && path, "null matrix or path")) return s;
  return wrap([&] {
    cldpc::write_exponent_matrix_file(m->m, path);
    return CLDPC_OK;
  });
}

void cldpc_matrix_free(cldpc_matrix* m) { delete m; }

int32_t cldpc_matrix_rows(const cldpc_matrix* m) { return m ? m->m.rows() : 0; }
int32_t cldpc_matrix_cols(const cldpc_matrix* m) { return m ? m->m.cols() : 0; }
int64_t cldpc_matrix_lifting(const cldpc_matrix* m) {
  return m ? m->m.lifting() : CLDPC_LIFTING_UNBOUNDED;
}

cldpc_status cldpc_matrix_entry(const cldpc_matrix* m, int32_t row, int32_t col, int64_t* out) {
  if (cldpc_status s = require(m && out, "null matrix or output")) return s;
  if (row < 0 || row >= m->m.rows() || col < 0 || col >= m->m.cols()) {
    set_error("matrix index out of range");
    return CLDPC_ERR_OUT_OF_RANGE;
  }
  *out = m->m.at(row, col);
  return CLDPC_OK;
}

cldpc_status cldpc_girth(const cldpc_matrix* m, int32_t cap, int32_t* girth_out) {
  if (cldpc_status s = require(m && girth_out, "null matrix or output")) return s;
  return wrap([&] {
    *girth_out = cldpc::girth(m->m, cap);
    return CLDPC_OK;
  });
}

cldpc_status cldpc_effective_rate(const cldpc_matrix* m, double* rate_out,
                                  int64_t* dimension_out) {
  if (cldpc_status s = require(m && rate_out, "null matrix or output")) return s;
  return wrap([&] {
    const auto h = cldpc::expand_block(m->m);
    const std::int64_t k = h.cols - cldpc::gf2_rank(h);
    *rate_out = static_cast<double>(k) / static_cast<double>(h.cols);
    if (dimension_out) *dimension_out = k;
    return CLDPC_OK;
  });
}

cldpc_status cldpc_design(const cldpc_design_config* config, cldpc_matrix** matrix_out,
                          cldpc_design_stats* stats_out) {
  if (cldpc_status s = require(config && matrix_out, "null config or output")) return s;
  return wrap([&] {
    const auto out = cldpc::find_min_lifting(to_config(*config));
    fill_stats(stats_out, out);
    if (!out.result) {
      set_error(out.budget_exhausted ? "search budget exhausted before a success"
                                     : "no SMC code found in the lifting range");
      return out.budget_exhausted ? CLDPC_ERR_BUDGET_EXHAUSTED : CLDPC_ERR_SEARCH_FAILED;
    }
    *matrix_out = new cldpc_matrix{out.result->matrix};
    return CLDPC_OK;
  });
}

cldpc_status cldpc_design_all(const cldpc_design_config* config, cldpc_design_sink sink,
                              void* user, cldpc_design_stats* stats_out) {
  if (cldpc_status s = require(config && sink, "null config or sink")) return s;
  return wrap([&] {
    cldpc::SmcSearchConfig cfg = to_config(*config);
    cfg.p1_strategy = cldpc::P1Strategy::exhaustive;
    const auto out = cldpc::find_min_lifting(cfg);
    fill_stats(stats_out, out);
    for (const auto& r : out.all_results) {
      cldpc_matrix view{r.matrix};
      sink(&view, user);
    }
    if (out.all_results.empty()) {
      set_error(out.budget_exhausted ? "search budget exhausted before a success"
                                     : "no SMC code found in the lifting range");
      return out.budget_exhausted ? CLDPC_ERR_BUDGET_EXHAUSTED : CLDPC_ERR_SEARCH_FAILED;
    }
    return CLDPC_OK;
  });
}

cldpc_status cldpc_unwrap(const cldpc_matrix* m, int32_t reduce_memory, int32_t girth_cap,
                          cldpc_matrix** conv_out, cldpc_conv_info* info_out) {
  if (cldpc_status s = require(m, "null matrix")) return s;
  return wrap([&] {
    cldpc::ConvolutionalCode code =
        m->m.is_finite() ? cldpc::unwrap_qc(m->m) : cldpc::ConvolutionalCode(m->m);
    if (reduce_memory) code = cldpc::reduce_memory(code);
    if (info_out) {
      info_out->memory_order = code.memory_order();
      info_out->constraint_length = code.constraint_length();
      info_out->rate = code.rate();
      info_out->girth = cldpc::girth(code.base(), girth_cap);
    }
    if (conv_out) *conv_out = new cldpc_matrix{code.base()};
    return CLDPC_OK;
  });
}

cldpc_status cldpc_f_complexity(int64_t x, double rate, double* out) {
  if (cldpc_status s = require(out, "null output")) return s;
  return wrap([&] {
    *out = cldpc::f_complexity(x, rate);
    return CLDPC_OK;
  });
}

cldpc_status cldpc_metrics_bp(int64_t n, int64_t lifting, int64_t m, double rate, double i_avg,
                              double* latency_out, double* complexity_out) {
  if (cldpc_status s = require(latency_out && complexity_out, "null output")) return s;
  return wrap([&] {
    *latency_out = cldpc::latency_bp(n, lifting);
    *complexity_out = cldpc::complexity_bp(i_avg, m, rate);
    return CLDPC_OK;
  });
}

cldpc_status cldpc_metrics_sw(int64_t a, int64_t c, int64_t memory_order, double alpha,
                              double rate, double i_avg, double* latency_out,
                              double* complexity_out) {
  if (cldpc_status s = require(latency_out && complexity_out, "null output")) return s;
  return wrap([&] {
    *latency_out = cldpc::latency_sw(alpha, memory_order, a);
    *complexity_out = cldpc::complexity_sw(alpha, memory_order, i_avg, c, rate);
    return CLDPC_OK;
  });
}

cldpc_status cldpc_theta_n(int64_t n_new, int64_t n_star, double* out) {
  if (cldpc_status s = require(out, "null output")) return s;
  return wrap([&] {
    *out = cldpc::theta_n(n_new, n_star);
    return CLDPC_OK;
  });
}

cldpc_status cldpc_theta_mh(int64_t mh_new, int64_t mh_star, double* out) {
  if (cldpc_status s = require(out, "null output")) return s;
  return wrap([&] {
    *out = cldpc::theta_mh(mh_new, mh_star);
    return CLDPC_OK;
  });
}

cldpc_status cldpc_simulate(const cldpc_matrix* m, const cldpc_sim_config* config,
                            cldpc_sim_point* points_out, const char* csv_path,
                            double* rate_used_out, int64_t* window_blocks_out) {
  if (cldpc_status s = require(m && config, "null matrix or config")) return s;
  if (cldpc_status s = require(config->snr_db && config->snr_count > 0, "empty SNR list")) {
    return s;
  }
  return wrap([&] {
    cldpc::ChannelConfig channel;
    channel.snr_db.assign(config->snr_db, config->snr_db + config->snr_count);
    channel.es_n0 = config->es_n0 != 0;
    channel.seed = config->seed;

    cldpc::DecoderConfig dcfg;
    dcfg.algorithm = config->algorithm == CLDPC_BP_MIN_SUM ? cldpc::BpAlgorithm::min_sum
                                                           : cldpc::BpAlgorithm::sum_product;
    if (config->max_iters > 0) dcfg.max_iters = config->max_iters;
    dcfg.early_stop = config->early_stop != 0;
    if (config->llr_clip > 0) dcfg.llr_clip = config->llr_clip;
    if (config->min_sum_scale > 0) dcfg.min_sum_scale = config->min_sum_scale;

    cldpc::StopRule stop;
    stop.min_block_errors = config->stop_block_errors;
    stop.max_bits = config->stop_max_bits;
    stop.max_blocks = config->stop_max_blocks;

    cldpc::SimOptions opts;
    if (config->threads > 0) opts.threads = config->threads;
    opts.transmit_random = config->transmit_random != 0;

    cldpc::SimResult result;
    if (config->mode == CLDPC_SIM_SC) {
      cldpc::ConvolutionalCode code =
          m->m.is_finite() ? cldpc::unwrap_qc(m->m) : cldpc::ConvolutionalCode(m->m);
      cldpc::SlidingWindowConfig sw;
      if (config->alpha > 0) sw.alpha = config->alpha;
      sw.window_blocks = config->window_blocks;
      if (config->iters_per_position > 0) sw.iters_per_position = config->iters_per_position;
      const std::int64_t chain =
          config->chain_len_blocks > 0 ? config->chain_len_blocks
                                       : 10 * (code.memory_order() + 1);
      result = cldpc::run_sc_sim(code, channel, sw, dcfg, chain, stop, opts);
    } else {
      result = cldpc::run_block_sim(m->m, channel, dcfg, stop, opts);
    }
    if (config->code_id) result.code_id = config->code_id;

    if (points_out) {
      for (std::size_t i = 0; i < result.points.size(); ++i) {
        const cldpc::SimPoint& p = result.points[i];
        points_out[i] = cldpc_sim_point{p.snr_db, p.bits,  p.bit_errors, p.blocks,
                                        p.block_errors,    p.ber(),      p.bler(),
                                        p.avg_iters(),     p.elapsed_s};
      }
    }
    if (rate_used_out) *rate_used_out = result.rate_used;
    if (window_blocks_out) {
      *window_blocks_out = result.has_window ? result.window.window_blocks : 0;
    }
    if (csv_path) {
      std::ofstream out(csv_path);
      if (!out) throw cldpc::IoError(std::string("cannot open '") + csv_path + "' for writing");
      cldpc::write_csv(result, out);
    }
    return CLDPC_OK;
  });
}

cldpc_status cldpc_catalog_open(const char* dir, cldpc_catalog** out) {
  if (cldpc_status s = require(dir && out, "null directory or output")) return s;
  return wrap([&] {
    *out = new cldpc_catalog{cldpc::load_catalog(dir)};
    return CLDPC_OK;
  });
}

void cldpc_catalog_free(cldpc_catalog* catalog) { delete catalog; }

size_t cldpc_catalog_size(const cldpc_catalog* catalog) {
  return catalog ? catalog->entries.size() : 0;
}

cldpc_status cldpc_catalog_entry(const cldpc_catalog* catalog, size_t index,
                                 cldpc_catalog_entry_info* out) {
  if (cldpc_status s = require(catalog && out, "null catalog or output")) return s;
  if (index >= catalog->entries.size()) {
    set_error("catalog index out of range");
    return CLDPC_ERR_OUT_OF_RANGE;
  }
  const cldpc::CatalogEntry& e = catalog->entries[index];
  out->id = e.id.c_str();
  out->kind = kind_string(e.kind);
  out->table = e.table.c_str();
  out->citation = e.competitor_citation.c_str();
  out->rows = e.base_rows;
  out->cols = e.base_cols;
  out->lifting_or_memory = e.lifting_or_memory;
  out->girth = e.girth_claim;
  out->rate = e.rate_claim.value_or(-1.0);
  out->competitor = e.competitor_value.value_or(-1);
  out->has_matrix = e.matrix.has_value() ? 1 : 0;
  return CLDPC_OK;
}

cldpc_status cldpc_catalog_find(const cldpc_catalog* catalog, const char* id, size_t* index_out) {
  if (cldpc_status s = require(catalog && id && index_out, "null catalog, id or output")) return s;
  for (std::size_t i = 0; i < catalog->entries.size(); ++i) {
    if (catalog->entries[i].id == id) {
      *index_out = i;
      return CLDPC_OK;
    }
  }
  set_error(std::string("no catalog entry named '") + id + "'");
  return CLDPC_ERR_OUT_OF_RANGE;
}

cldpc_status cldpc_catalog_matrix(const cldpc_catalog* catalog, size_t index,
                                  cldpc_matrix** out) {
  if (cldpc_status s = require(catalog && out, "null catalog or output")) return s;
  if (index >= catalog->entries.size()) {
    set_error("catalog index out of range");
    return CLDPC_ERR_OUT_OF_RANGE;
  }
  const cldpc::CatalogEntry& e = catalog->entries[index];
  if (!e.matrix) {
    set_error("entry '" + e.id + "' has no stored matrix");
    return CLDPC_ERR_INVALID_ARGUMENT;
  }
  *out = new cldpc_matrix{*e.matrix};
  return CLDPC_OK;
}

cldpc_status cldpc_catalog_verify(const cldpc_catalog* catalog, size_t index, int32_t check_rate,
                                  cldpc_verify_report* out) {
  if (cldpc_status s = require(catalog && out, "null catalog or output")) return s;
  if (index >= catalog->entries.size()) {
    set_error("catalog index out of range");
    return CLDPC_ERR_OUT_OF_RANGE;
  }
  return wrap([&] {
    const auto r = cldpc::verify_entry(catalog->entries[index],
                                       cldpc::VerifyOptions{.check_rate = check_rate != 0});
    out->pass = r.pass ? 1 : 0;
    out->girth_found = r.girth_found;
    out->rate_checked = r.rate_checked ? 1 : 0;
    out->rate_computed = r.rate_computed;
    out->rate_matches = r.rate_matches ? 1 : 0;
    std::snprintf(out->detail, sizeof out->detail, "%s", r.detail.c_str());
    return CLDPC_OK;
  });
}

}  // extern "C"
