#include <gtest/gtest.h>

#include "dcm/scale.hpp"
#include "support.hpp"

namespace dcm {
namespace {

TEST(Scale, G1Ladder) {
  auto t = test::load_table("g1_costs");
  auto s = build_interval_scale(t, 1, 5, 0.0, 100.0);
  EXPECT_DOUBLE_EQ(s.alpha, 10.0);
  EXPECT_EQ(s.utilities, (std::vector<double>{0, 40, 70, 90, 100}));
  EXPECT_DOUBLE_EQ(s.at(5), 100.0);
  EXPECT_EQ(s.coordinates, t.coordinates);
}

TEST(Scale, InterpolatesOnDescendingCoordinates) {
  auto s = build_interval_scale(test::load_table("g1_costs"), 1, 5, 0.0, 100.0);
  EXPECT_NEAR(interpolate(s, 30), 98.8, 1e-12);
  EXPECT_NEAR(interpolate(s, 900), 16.0, 1e-12);
  EXPECT_NEAR(interpolate(s, 500), 70.0, 1e-12);
  EXPECT_NEAR(interpolate(s, 1000), 0.0, 1e-12);
  try {
    interpolate(s, 1200);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}

TEST(Scale, InteriorAnchorsExtrapolateTheLadder) {
  auto t = complete_from_consecutive({0, 1, 2});
  auto s = build_interval_scale(t, 2, 3, 10.0, 30.0);
  EXPECT_DOUBLE_EQ(s.alpha, 10.0);
  EXPECT_EQ(s.utilities, (std::vector<double>{0, 10, 30, 60}));
}

TEST(Scale, RejectsInconsistentOrNonExact) {
  try {
    build_interval_scale(test::load_table("s61_inconsistent"), 1, 5, 0, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentTable);
  }
  EXPECT_THROW(build_interval_scale(test::load_table("s73_second"), 1, 5, 0, 100), Error);
  EXPECT_THROW(build_interval_scale(test::load_table("g1_costs"), 3, 3, 0, 100), Error);
}

TEST(Scale, ContinuousTableScale) {
  ContinuousTable c(3);
  c.set(1, 2, 0.5);
  c.set(2, 3, 1.5);
  c.set(1, 3, 3.0);
  auto s = build_interval_scale(c, 1, 3, 0.0, 100.0);
  EXPECT_NEAR(s.alpha, 25.0, 1e-12);
  EXPECT_NEAR(s.utilities[1], 37.5, 1e-12);
  EXPECT_DOUBLE_EQ(s.utilities[2], 100.0);
}

TEST(Ratio, WeightsFromCards) {
  auto w = build_ratio_weights(7, {1, 1, 0, 1, 2, 4}, 1.0, 8.0);
  EXPECT_NEAR(w.unit, 7.0 / 15.0, 1e-12);
  EXPECT_DOUBLE_EQ(w.weights.front(), 1.0);
  EXPECT_DOUBLE_EQ(w.weights.back(), 8.0);
  EXPECT_NEAR(w.weights[3], 1.0 + 5 * 7.0 / 15.0, 1e-12);
}

TEST(Ratio, ValidatesInputs) {
  try {
    build_ratio_weights(3, {1, 1}, 1.0, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadRatio);
  }
  try {
    build_ratio_weights(3, {1}, 1.0, 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadRanking);
  }
  EXPECT_EQ(build_ratio_weights(1, {}, 2.0, 1.0).weights, (std::vector<double>{2.0}));
  EXPECT_EQ(build_ratio_weights(3, {0, 2}, 1.5, 1.0).weights, (std::vector<double>{1.5, 1.5, 1.5}));
}

}  // namespace
}  // namespace dcm
