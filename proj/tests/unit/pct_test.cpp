#include <gtest/gtest.h>

#include "dcm/pct.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace dcm {
namespace {

using test::rows;

TEST(Pct, RowMajorIndexing) {
  PairwiseTable t(4);
  EXPECT_EQ(t.cell_count(), 6u);
  EXPECT_EQ(t.index(1, 2), 0u);
  EXPECT_EQ(t.index(1, 4), 2u);
  EXPECT_EQ(t.index(2, 3), 3u);
  EXPECT_EQ(t.index(3, 4), 5u);
  EXPECT_EQ(t.pair_at(4), (Pair{2, 4}));
  EXPECT_THROW(t.index(2, 2), Error);
  EXPECT_THROW(t.index(0, 3), Error);
}

TEST(Pct, CellFactories) {
  EXPECT_TRUE(Cell::exact(3).contains(3));
  EXPECT_FALSE(Cell::exact(3).contains(4));
  EXPECT_TRUE(Cell::interval(2, 4).contains(4));
  EXPECT_TRUE(Cell::missing().contains(99));
  EXPECT_THROW(Cell::interval(4, 2), Error);
  EXPECT_THROW(Cell::exact(-1), Error);
}

TEST(Pct, CompleteFromConsecutive) {
  auto t = complete_from_consecutive({1, 0, 3, 2});
  EXPECT_EQ(test::flat(t), (std::vector<Cards>{1, 2, 6, 9, 0, 4, 7, 3, 6, 2}));
  EXPECT_TRUE(check_consistency(t).empty());
}

TEST(Pct, TableFromGapsMatchesOracle) {
  GapVector d{2, 0, 5, 1};
  auto t = table_from_gaps(d);
  for (const auto& pr : t.pairs()) EXPECT_EQ(t.exact(pr.p, pr.q), oracle::cards(d, pr.p, pr.q));
  EXPECT_EQ(cards_between(d, 1, 5), 11);
  EXPECT_EQ(cards_between(d, 2, 3), 0);
}

TEST(Pct, CheckListsEveryViolatedTriple) {
  auto t = test::load_table("s61_inconsistent");
  auto v = check_consistency(t);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], (Violation{1, 2, 5, 9, 8}));
  EXPECT_EQ(v[1], (Violation{1, 3, 5, 9, 8}));
  EXPECT_EQ(v[2], (Violation{1, 4, 5, 9, 8}));
}

TEST(Pct, CheckRejectsNonExact) {
  auto t = rows(3, {{1, test::Q}, {0}});
  EXPECT_THROW(check_consistency(t), Error);
}

TEST(Pct, GapsFromTable) {
  auto t = test::load_table("g1_costs");
  auto d = gaps_from_table(t);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, (GapVector{3, 2, 1, 0}));
  EXPECT_FALSE(gaps_from_table(test::load_table("s61_inconsistent")).has_value());
  try {
    gaps_or_throw(test::load_table("s61_inconsistent"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConsistent);
  }
}

TEST(Pct, ContinuousResidual) {
  auto c = to_continuous(complete_from_consecutive({1, 0, 3, 2}));
  EXPECT_DOUBLE_EQ(consistency_residual(c), 0.0);
  c.set(1, 5, 9.5);
  EXPECT_NEAR(consistency_residual(c), 0.5, 1e-12);
}

TEST(Pct, ExportGraph) {
  auto t = rows(3, {{1, 3}, {1}});
  t.labels = {"low", "mid", "high"};
  std::string dot = export_graph(t, "demo");
  EXPECT_EQ(dot.rfind("digraph \"demo\" {", 0), 0u);
  EXPECT_NE(dot.find("n1 [label=\"low\"];"), std::string::npos);
  EXPECT_NE(dot.find("n1 -> n3 [label=\"3\"];"), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}

TEST(Pct, ExportBarsAreOneLonger) {
  auto t = test::load_table("s61_inconsistent");
  auto bars = export_bars(t);
  ASSERT_EQ(bars.size(), 10u);
  EXPECT_EQ(bars[0].pair, (Pair{1, 2}));
  EXPECT_EQ(bars[0].length, 3);
  EXPECT_EQ(bars[3].length, 9);
}

TEST(Pct, LevelCoordinatesMustBeMonotone) {
  PairwiseTable t(3);
  t.coordinates = {1.0, 3.0, 2.0};
  EXPECT_THROW(validate_levels(t), Error);
  t.coordinates = {3.0, 2.0, 1.0};
  EXPECT_NO_THROW(validate_levels(t));
}

}  // namespace
}  // namespace dcm
