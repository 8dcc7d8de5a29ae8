#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cldpc/cycles.hpp"
#include "cldpc/exponent_matrix.hpp"

namespace cldpc {

enum class CatalogKind {
  block,                 // QC block code, finite lifting
  convolutional,         // SC code with stored exponent matrix
  convolutional_params,  // SC code known only by its parameters
};

// One published code with its claimed parameters and the best previously
// known competitor value (the number in brackets in the source tables).
struct CatalogEntry {
  std::string id;
  CatalogKind kind = CatalogKind::block;
  std::string table;
  std::int64_t base_rows = 0;          // m (block) or c (convolutional)
  std::int64_t base_cols = 0;          // n or a
  std::int64_t lifting_or_memory = 0;  // N or m_h
  int girth_claim = 0;
  std::optional<double> rate_claim;
  std::optional<std::int64_t> constraint_length_claim;  // v_s
  std::optional<std::int64_t> competitor_value;
  std::string competitor_citation;
  std::optional<ExponentMatrix> matrix;
};

struct VerifyOptions {
  bool check_rate = true;  // recompute effective rate of block entries
};

struct EntryReport {
  std::string id;
  bool pass = true;
  bool dims_ok = true;
  bool params_ok = true;  // N / m_h / v_s consistency
  bool girth_ok = true;
  int girth_found = -1;  // -1 not checked, 0 greater than claimed girth
  bool rate_checked = false;
  double rate_computed = 0.0;
  bool rate_matches = true;  // informative only, never fails the entry
  std::optional<CycleWitness> witness;
  std::string detail;
};

// Reads manifest.json and the referenced exponent-matrix files.
std::vector<CatalogEntry> load_catalog(const std::string& dir);

EntryReport verify_entry(const CatalogEntry& entry, const VerifyOptions& opts = {});
std::vector<EntryReport> verify_catalog(const std::vector<CatalogEntry>& entries,
                                        const VerifyOptions& opts = {});

std::string format_witness(const CycleWitness& w);

}  // namespace cldpc
