#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cldpc/coupled.hpp"
#include "cldpc/catalog.hpp"
#include "cldpc/cycles.hpp"
#include "test_helpers.hpp"

using namespace cldpc;
using test::mk;
using test::random_matrix;

TEST_CASE("symbolic form of monomial codes") {
  const auto s0 = to_symbolic(mk({{0}}, kUnboundedLifting));
  CHECK(s0.at(0, 0) == std::vector<std::int64_t>{0});

  const auto s5 = to_symbolic(test::table5_a4());
  std::int64_t max_deg = 0;
  for (const auto& cell : s5.degrees) {
    REQUIRE(cell.size() == 1);
    max_deg = std::max(max_deg, cell[0]);
  }
  CHECK(max_deg == 11);
  CHECK(ConvolutionalCode(test::table5_a4()).memory_order() == 11);

  const auto s2 = to_symbolic(mk({{0, 1}, {2, 0}}, kUnboundedLifting));
  CHECK(s2.at(1, 0) == std::vector<std::int64_t>{2});
  CHECK(ConvolutionalCode(mk({{0, 1}, {2, 0}}, kUnboundedLifting)).memory_order() == 2);
}

TEST_CASE("band blocks of trivial codes") {
  const ConvolutionalCode one(mk({{0}}, kUnboundedLifting));
  const auto b1 = band_blocks(one);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0][0][0] == 1);

  const ConvolutionalCode two(mk({{0, 1}}, kUnboundedLifting));
  const auto b2 = band_blocks(two);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0][0] == std::vector<std::uint8_t>{1, 0});
  CHECK(b2[1][0] == std::vector<std::uint8_t>{0, 1});
}

TEST_CASE("monomial mass: band blocks hold exactly c*a ones") {
  const ConvolutionalCode code(test::table5_a4());
  const auto blocks = band_blocks(code);
  CHECK(blocks.size() == 12);  // m_h + 1
  std::int64_t ones = 0;
  for (const auto& b : blocks) {
    for (const auto& row : b) {
      for (std::uint8_t v : row) ones += v;
    }
  }
  CHECK(ones == 12);  // c * a

  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const ConvolutionalCode c(random_matrix(rng, 3, 5, kUnboundedLifting, 9));
    std::int64_t total = 0;
    for (const auto& b : band_blocks(c)) {
      for (const auto& row : b) {
        for (std::uint8_t v : row) total += v;
      }
    }
    CHECK(total == 15);
  }
}

TEST_CASE("window matrix basics") {
  const ConvolutionalCode one(mk({{0}}, kUnboundedLifting));
  const auto w = window_matrix(one, 1, 0, 4);
  CHECK(w.h.rows == 1);
  CHECK(w.h.cols == 1);
  CHECK(w.h.get(0, 0));
  CHECK(w.target_cols == 1);
  CHECK_THROWS_AS(window_matrix(one, 5, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(window_matrix(one, 2, 3, 4), std::invalid_argument);
}

TEST_CASE("a window of m_h+1 blocks fully contains the target block's band") {
  const ConvolutionalCode code(test::table5_a4());
  const std::int64_t W = code.memory_order() + 1;
  const auto w = window_matrix(code, W, 20, 100);
  const auto cols = w.h.col_support();
  for (int j = 0; j < code.symbol_count(); ++j) {
    CHECK(cols[static_cast<std::size_t>(j)].size() ==
          static_cast<std::size_t>(code.check_count()));
  }
  // the last block row of this window sits entirely inside it
  for (int i = 0; i < code.check_count(); ++i) {
    const auto& sup = w.h.row_support[static_cast<std::size_t>((W - 1) * 3 + i)];
    CHECK(sup.size() == static_cast<std::size_t>(code.symbol_count()));
    CHECK(!w.row_references_past[static_cast<std::size_t>((W - 1) * 3 + i)]);
  }
}

TEST_CASE("windows tile the semi-infinite band") {
  std::mt19937 rng(17);
  const ConvolutionalCode code(random_matrix(rng, 2, 4, kUnboundedLifting, 5));
  const auto blocks = band_blocks(code);
  const std::int64_t mh = code.memory_order();
  const int c = code.check_count();
  const int a = code.symbol_count();
  for (std::int64_t t : {std::int64_t{0}, std::int64_t{3}, std::int64_t{7}}) {
    const std::int64_t W = mh + 2;
    const auto w = window_matrix(code, W, t, 32);
    for (std::int64_t br = 0; br < W; ++br) {
      for (std::int64_t bc = 0; bc < W; ++bc) {
        const std::int64_t d = br - bc;  // global (t+br) - (t+bc)
        for (int i = 0; i < c; ++i) {
          for (int j = 0; j < a; ++j) {
            const bool expect = d >= 0 && d <= mh && blocks[static_cast<std::size_t>(d)]
                                                         [static_cast<std::size_t>(i)]
                                                         [static_cast<std::size_t>(j)];
            CHECK(w.h.get(br * c + i, bc * a + j) == expect);
          }
        }
      }
    }
  }
}

TEST_CASE("past references are flagged exactly when a tap precedes the window") {
  const ConvolutionalCode code(test::table5_a4());
  const auto w = window_matrix(code, 3, 5, 50);  // W < m_h+1: early rows reach back
  const auto& p = code.base();
  for (std::int64_t br = 0; br < 3; ++br) {
    for (int i = 0; i < 3; ++i) {
      bool expect = false;
      for (int j = 0; j < 4; ++j) {
        const std::int64_t s = (5 + br) - p.at(i, j);
        if (s >= 0 && s < 5) expect = true;
      }
      CHECK(w.row_references_past[static_cast<std::size_t>(br * 3 + i)] == expect);
    }
  }
}

TEST_CASE("unwrapping published block codes") {
  const auto conv = unwrap_qc(test::table1_n4());
  CHECK(conv.memory_order() == 27);
  CHECK(conv.constraint_length() == 28 * 4);
  const int g = girth(conv.base(), 12);
  CHECK((g == 0 || g >= 10));  // never below the block girth

  const auto zero = unwrap_qc(mk({{0, 0}, {0, 0}}, 5));
  CHECK(zero.memory_order() == 0);
  CHECK(girth(zero.base(), 12) == 4);

  const auto pair = unwrap_qc(mk({{0, 0}, {0, 1}}, 5));
  CHECK(pair.memory_order() == 1);
  CHECK(girth(pair.base(), 4) == 0);  // the length-4 sum is +-1, never zero
}

TEST_CASE("unwrapping never lowers the girth of any cataloged block code") {
  for (const auto& entry : load_catalog(CLDPC_CATALOG_DIR)) {
    if (entry.kind != CatalogKind::block) continue;
    const auto conv = unwrap_qc(*entry.matrix);
    // no strictly avoidable cycle may appear below the block girth
    CHECK(girth(conv.base(), entry.girth_claim - 2) == 0);
  }
}

TEST_CASE("memory reduction by row/column offsets") {
  const ConvolutionalCode shifted(mk({{5, 5}, {5, 6}}, kUnboundedLifting));
  // construction already normalizes the global shift away
  CHECK(shifted.memory_order() == 1);
  CHECK(reduce_memory(shifted).base() == mk({{0, 0}, {0, 1}}, kUnboundedLifting));

  const ConvolutionalCode flat(mk({{0, 0, 0}, {0, 0, 0}}, kUnboundedLifting));
  CHECK(reduce_memory(flat).base() == flat.base());

  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const ConvolutionalCode code(random_matrix(rng, 3, 5, kUnboundedLifting, 14));
    const ConvolutionalCode reduced = reduce_memory(code);
    CHECK(reduced.memory_order() <= code.memory_order());
    CHECK(girth(reduced.base(), 12) == girth(code.base(), 12));
  }
}

TEST_CASE("reduction actually helps on an offset-inflated base") {
  // start from a compact base, inflate rows and columns, expect full recovery
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto base = random_matrix(rng, 3, 4, kUnboundedLifting, 6);
    std::vector<std::int64_t> e(base.entries().begin(), base.entries().end());
    for (int i = 0; i < 3; ++i) {
      const std::int64_t d = static_cast<std::int64_t>(rng() % 40);
      for (int j = 0; j < 4; ++j) e[static_cast<std::size_t>(i) * 4 + j] += d;
    }
    for (int j = 0; j < 4; ++j) {
      const std::int64_t d = static_cast<std::int64_t>(rng() % 40);
      for (int i = 0; i < 3; ++i) e[static_cast<std::size_t>(i) * 4 + j] += d;
    }
    const ConvolutionalCode inflated(ExponentMatrix(3, 4, e, kUnboundedLifting));
    const ConvolutionalCode reduced = reduce_memory(inflated);
    CHECK(reduced.memory_order() <= ConvolutionalCode(base).memory_order());
  }
}
