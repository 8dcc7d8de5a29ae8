#include <doctest.h>

#include <stdexcept>

#include "cldpc/catalog.hpp"
#include "cldpc/gf2.hpp"
#include "cldpc/tanner.hpp"
#include "test_helpers.hpp"

using namespace cldpc;

namespace {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = load_catalog(CLDPC_CATALOG_DIR);
  return entries;
}

const CatalogEntry& entry_by_id(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  REQUIRE(false);
  throw std::runtime_error("unreachable");
}

}  // namespace

TEST_CASE("catalog loads all published tables") {
  CHECK(catalog().size() == 58);
  int block = 0, conv = 0, params = 0;
  for (const auto& e : catalog()) {
    switch (e.kind) {
      case CatalogKind::block: ++block; break;
      case CatalogKind::convolutional: ++conv; break;
      case CatalogKind::convolutional_params: ++params; break;
    }
  }
  CHECK(block == 28);
  CHECK(conv == 29);  // tables V-VIII plus the named comparison code
  CHECK(params == 1);
}

TEST_CASE("stored matrices match the embedded fixtures") {
  CHECK(*entry_by_id("table1-n4").matrix == test::table1_n4());
  CHECK(*entry_by_id("table3-n4").matrix == test::table3_n4());
  const auto& t5 = entry_by_id("table5-a4");
  CHECK(*t5.matrix == test::table5_a4());
  CHECK(t5.competitor_value == 10);
}

TEST_CASE("spot verification of small entries") {
  VerifyOptions opts;
  opts.check_rate = true;
  const auto r1 = verify_entry(entry_by_id("table1-n4"), opts);
  CHECK(r1.pass);
  CHECK(r1.girth_found == 10);
  CHECK(r1.rate_checked);
  CHECK(r1.rate_matches);  // table prints 0.263 for 39/148
  const auto r3 = verify_entry(entry_by_id("table3-n4"), opts);
  CHECK(r3.pass);
  CHECK(r3.girth_found == 12);
  const auto r5 = verify_entry(entry_by_id("table5-a4"), opts);
  CHECK(r5.pass);
  const auto r9 = verify_entry(entry_by_id("table9-C2"), opts);
  CHECK(r9.pass);  // parameter-only entry: v_s arithmetic
}

TEST_CASE("a corrupted shift fails with a concrete witness") {
  CatalogEntry broken = entry_by_id("table1-n4");
  broken.matrix = broken.matrix->with_entry(1, 1, 2);  // 1 -> 2
  const auto report = verify_entry(broken, VerifyOptions{.check_rate = false});
  CHECK(!report.pass);
  CHECK(!report.girth_ok);
  CHECK(report.girth_found < 10);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->present);
  CHECK(report.witness->candidate.length() == report.girth_found);
  // the BFS oracle agrees something this short exists in the lifted graph
  const int oracle = tanner_girth(expand_block(*broken.matrix), 12);
  CHECK(oracle <= report.witness->candidate.length());
}

TEST_CASE("missing matrix is reported, not thrown") {
  CatalogEntry e = entry_by_id("table1-n4");
  e.matrix.reset();
  const auto report = verify_entry(e);
  CHECK(!report.pass);
}
