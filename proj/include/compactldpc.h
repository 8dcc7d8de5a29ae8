/* C interface to the compact QC/SC-LDPC toolkit.
 *
 * All functions returning cldpc_status set a thread-local message readable
 * through cldpc_last_error() on failure. Handles are opaque; every *_free
 * accepts NULL.
 */
#ifndef COMPACTLDPC_H
#define COMPACTLDPC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CLDPC_API __declspec(dllexport)
#else
#define CLDPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cldpc_status {
  CLDPC_OK = 0,
  CLDPC_ERR_INVALID_ARGUMENT = 1,
  CLDPC_ERR_IO = 2,
  CLDPC_ERR_PARSE = 3,
  CLDPC_ERR_SEARCH_FAILED = 4,    /* scan range exhausted without a success */
  CLDPC_ERR_BUDGET_EXHAUSTED = 5, /* node/time budget hit before the range ended */
  CLDPC_ERR_OUT_OF_RANGE = 6,
  CLDPC_ERR_INTERNAL = 7
} cldpc_status;

/* lifting value selecting the convolutional (monomial-degree) reading */
#define CLDPC_LIFTING_UNBOUNDED 0

typedef struct cldpc_matrix cldpc_matrix;
typedef struct cldpc_catalog cldpc_catalog;

CLDPC_API const char* cldpc_version(void);
CLDPC_API const char* cldpc_status_string(cldpc_status status);
CLDPC_API const char* cldpc_last_error(void);

/* ---- exponent matrices ------------------------------------------------- */

CLDPC_API cldpc_status cldpc_matrix_create(int32_t rows, int32_t cols, const int64_t* entries,
                                           int64_t lifting, cldpc_matrix** out);
CLDPC_API cldpc_status cldpc_matrix_read_file(const char* path, cldpc_matrix** out);
CLDPC_API cldpc_status cldpc_matrix_write_file(const cldpc_matrix* m, const char* path);
CLDPC_API void cldpc_matrix_free(cldpc_matrix* m);

CLDPC_API int32_t cldpc_matrix_rows(const cldpc_matrix* m);
CLDPC_API int32_t cldpc_matrix_cols(const cldpc_matrix* m);
CLDPC_API int64_t cldpc_matrix_lifting(const cldpc_matrix* m);
CLDPC_API cldpc_status cldpc_matrix_entry(const cldpc_matrix* m, int32_t row, int32_t col,
                                          int64_t* out);

/* Smallest present cycle length up to cap (even, 4..12); 0 means every
 * length up to cap is cycle-free. Finite lifting tests modular sums, the
 * unbounded reading tests exact zero sums. */
CLDPC_API cldpc_status cldpc_girth(const cldpc_matrix* m, int32_t cap, int32_t* girth_out);

/* (nN - rank(H)) / nN of the expanded block code. */
CLDPC_API cldpc_status cldpc_effective_rate(const cldpc_matrix* m, double* rate_out,
                                            int64_t* dimension_out);

/* ---- SMC design --------------------------------------------------------- */

typedef struct cldpc_design_config {
  int32_t rows;
  int32_t cols;
  int32_t target_girth; /* 6, 8, 10 or 12 */
  int64_t n_min;
  int64_t n_max;
  uint64_t node_budget;  /* 0 = unlimited candidate checks */
  double time_budget_s;  /* 0 = unlimited */
} cldpc_design_config;

typedef struct cldpc_design_stats {
  uint64_t nodes_used;
  int64_t last_n_completed;
  int32_t budget_exhausted;
} cldpc_design_stats;

/* First (minimum-N) success of the ascending scan. */
CLDPC_API cldpc_status cldpc_design(const cldpc_design_config* config, cldpc_matrix** matrix_out,
                                    cldpc_design_stats* stats_out);

/* Every success in the range, in scan order. The matrix passed to the sink
 * is owned by the library and valid only during the call. */
typedef void (*cldpc_design_sink)(const cldpc_matrix* matrix, void* user);
CLDPC_API cldpc_status cldpc_design_all(const cldpc_design_config* config, cldpc_design_sink sink,
                                        void* user, cldpc_design_stats* stats_out);

/* ---- block/convolutional bridge ----------------------------------------- */

typedef struct cldpc_conv_info {
  int64_t memory_order;      /* m_h */
  int64_t constraint_length; /* v_s = (m_h + 1) a */
  double rate;               /* (a - c) / a */
  int32_t girth;             /* strict-sum girth, 0 = greater than cap */
} cldpc_conv_info;

/* Reinterprets the matrix as a convolutional code; reduce_memory != 0 also
 * searches girth-preserving row/column offsets that shrink m_h. */
CLDPC_API cldpc_status cldpc_unwrap(const cldpc_matrix* m, int32_t reduce_memory,
                                    int32_t girth_cap, cldpc_matrix** conv_out,
                                    cldpc_conv_info* info_out);

/* ---- latency / complexity metrics ---------------------------------------- */

CLDPC_API cldpc_status cldpc_f_complexity(int64_t x, double rate, double* out);
CLDPC_API cldpc_status cldpc_metrics_bp(int64_t n, int64_t lifting, int64_t m, double rate,
                                        double i_avg, double* latency_out,
                                        double* complexity_out);
CLDPC_API cldpc_status cldpc_metrics_sw(int64_t a, int64_t c, int64_t memory_order, double alpha,
                                        double rate, double i_avg, double* latency_out,
                                        double* complexity_out);
CLDPC_API cldpc_status cldpc_theta_n(int64_t n_new, int64_t n_star, double* out);
CLDPC_API cldpc_status cldpc_theta_mh(int64_t mh_new, int64_t mh_star, double* out);

/* ---- Monte Carlo simulation ---------------------------------------------- */

typedef enum cldpc_sim_mode { CLDPC_SIM_BLOCK = 0, CLDPC_SIM_SC = 1 } cldpc_sim_mode;
typedef enum cldpc_bp_algorithm {
  CLDPC_BP_SUM_PRODUCT = 0,
  CLDPC_BP_MIN_SUM = 1
} cldpc_bp_algorithm;

typedef struct cldpc_sim_config {
  int32_t mode;      /* cldpc_sim_mode */
  int32_t algorithm; /* cldpc_bp_algorithm */
  int32_t max_iters;
  int32_t early_stop; /* block decoding only; windows always run fixed counts */
  double llr_clip;
  double min_sum_scale;
  double alpha;              /* SC: W = alpha (m_h + 1) when window_blocks == 0 */
  int64_t window_blocks;     /* SC: explicit window size */
  int32_t iters_per_position;
  int64_t chain_len_blocks;  /* SC: chain length including the zero tail */
  const double* snr_db;
  size_t snr_count;
  int32_t es_n0; /* 0: Eb/N0 (default), 1: Es/N0 */
  uint64_t seed;
  int64_t stop_block_errors; /* 0 disables */
  int64_t stop_max_bits;     /* 0 disables */
  int64_t stop_max_blocks;   /* 0 disables */
  int32_t threads;
  int32_t transmit_random; /* block mode: encode random messages */
  const char* code_id;     /* optional; echoed into the CSV header */
} cldpc_sim_config;

typedef struct cldpc_sim_point {
  double snr_db;
  int64_t bits;
  int64_t bit_errors;
  int64_t blocks;
  int64_t block_errors;
  double ber;
  double bler;
  double avg_iters;
  double elapsed_s;
} cldpc_sim_point;

/* Fills points_out (snr_count entries; may be NULL) and optionally writes
 * the CSV rendering to csv_path. In SC mode a finite-lifting matrix is
 * unwrapped first. Identical (config, seed) pairs produce identical points
 * and CSV bytes regardless of the thread count. */
CLDPC_API cldpc_status cldpc_simulate(const cldpc_matrix* m, const cldpc_sim_config* config,
                                      cldpc_sim_point* points_out, const char* csv_path,
                                      double* rate_used_out, int64_t* window_blocks_out);

/* ---- published-code catalog ----------------------------------------------- */

CLDPC_API cldpc_status cldpc_catalog_open(const char* dir, cldpc_catalog** out);
CLDPC_API void cldpc_catalog_free(cldpc_catalog* catalog);
CLDPC_API size_t cldpc_catalog_size(const cldpc_catalog* catalog);

typedef struct cldpc_catalog_entry_info {
  const char* id;       /* owned by the catalog handle */
  const char* kind;     /* "block", "convolutional", "convolutional-params" */
  const char* table;
  const char* citation; /* empty string when none */
  int64_t rows;
  int64_t cols;
  int64_t lifting_or_memory; /* N or m_h */
  int32_t girth;
  double rate;        /* negative when the table prints none */
  int64_t competitor; /* negative when none */
  int32_t has_matrix;
} cldpc_catalog_entry_info;

CLDPC_API cldpc_status cldpc_catalog_entry(const cldpc_catalog* catalog, size_t index,
                                           cldpc_catalog_entry_info* out);
CLDPC_API cldpc_status cldpc_catalog_find(const cldpc_catalog* catalog, const char* id,
                                          size_t* index_out);
CLDPC_API cldpc_status cldpc_catalog_matrix(const cldpc_catalog* catalog, size_t index,
                                            cldpc_matrix** out);

typedef struct cldpc_verify_report {
  int32_t pass;
  int32_t girth_found; /* -1 not checked, 0 greater than the claim */
  int32_t rate_checked;
  double rate_computed;
  int32_t rate_matches; /* informative; never fails the entry */
  char detail[240];
} cldpc_verify_report;

CLDPC_API cldpc_status cldpc_catalog_verify(const cldpc_catalog* catalog, size_t index,
                                            int32_t check_rate, cldpc_verify_report* out);

#ifdef __cplusplus
}
#endif

#endif /* COMPACTLDPC_H */
