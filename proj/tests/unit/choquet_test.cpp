#include <gtest/gtest.h>

#include "dcm/choquet.hpp"
#include "dcm/pipeline.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace dcm {
namespace {

std::vector<double> mobius_masks(const TwoAdditiveCapacity& cap) {
  std::vector<double> m(std::size_t{1} << cap.criteria(), 0.0);
  for (int j = 0; j < cap.criteria(); ++j) m[std::size_t{1} << j] = cap.singletons[static_cast<std::size_t>(j)];
  for (const auto& pt : cap.pairs) m[(std::size_t{1} << pt.i) | (std::size_t{1} << pt.j)] = pt.m;
  return m;
}

TEST(Capacity, CardsFromClassTable) {
  auto cards = cards_from_table(test::load_table("capacity_ranking"));
  EXPECT_EQ(cards, (std::vector<Cards>{1, 1, 0, 1, 2, 4}));
}

TEST(Capacity, QuarryMobiusMasses) {
  auto cap = elicit_capacity(test::quarry());
  // g1..g6, then the pairs (g4,g5) and (g1,g5)
  ASSERT_EQ(cap.m.size(), 8u);
  EXPECT_NEAR(cap.m[5], 0.0541, 1e-4);
  EXPECT_NEAR(cap.m[0], 0.1046, 1e-4);
  EXPECT_NEAR(cap.m[4], 0.1552, 1e-4);
  EXPECT_NEAR(cap.m[1], 0.1805, 1e-4);
  EXPECT_NEAR(cap.m[2], 0.1805, 1e-4);
  EXPECT_NEAR(cap.m[3], 0.2310, 1e-4);
  EXPECT_NEAR(cap.m[6], -0.0794, 1e-4);
  EXPECT_NEAR(cap.m[7], 0.1732, 1e-4);
  EXPECT_NEAR(cap.mu[6], 0.3068, 1e-4);
  EXPECT_NEAR(cap.mu[7], 0.4332, 1e-4);
  EXPECT_TRUE(cap.valid());
  EXPECT_TRUE(cap.sign_mismatches.empty());
  EXPECT_NEAR(cap.capacity.mu(0b111111), 1.0, 1e-12);
  EXPECT_NEAR(mobius_to_capacity(cap.capacity, {3, 4}), 0.3068, 1e-4);
}

TEST(Capacity, ValidationFlagsBrokenCapacities) {
  TwoAdditiveCapacity cap;
  cap.singletons = {0.2, 0.5, 0.6};
  cap.pairs = {{0, 1, -0.3}};
  auto v = validate_2additive(cap);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, CapacityViolation::Kind::Monotonicity);
  EXPECT_EQ(v[0].criterion, 0);
  EXPECT_EQ(v[0].partners, (std::vector<int>{1}));
  EXPECT_NEAR(v[0].value, -0.1, 1e-12);
  cap.singletons = {0.5, 0.5, 0.5};
  cap.pairs.clear();
  v = validate_2additive(cap);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, CapacityViolation::Kind::Normalization);
  try {
    choquet_value({1, 2, 3}, cap);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapacityInvalid);
  }
}

TEST(Capacity, SignHintsAreChecked) {
  DummyProjectRanking r;
  r.criteria = 2;
  r.pairs = {{0, 1, InteractionSign::Positive}};
  r.classes = {{{0, -1}}, {{1, -1}}, {{0, 1}}};
  r.cards = {0, 0};
  r.ratio = 2.0;
  auto cap = capacity_from_dcm(r);
  ASSERT_EQ(cap.sign_mismatches.size(), 1u);
  EXPECT_LT(cap.m[2], 0.0);
}

TEST(Capacity, RankingMustCoverEveryProject) {
  DummyProjectRanking r;
  r.criteria = 3;
  r.classes = {{{0, -1}}, {{1, -1}}};
  r.cards = {0};
  r.ratio = 2.0;
  EXPECT_THROW(capacity_from_dcm(r), Error);
}

TEST(Choquet, FormsAgreeWithOracles) {
  auto cap = elicit_capacity(test::quarry()).capacity;
  auto masks = mobius_masks(cap);
  std::vector<double> u{98.2, 20, 52.630, 100, 54.546, 100};
  double a = choquet_capacity_form(u, cap);
  double b = choquet_mobius_form(u, cap);
  EXPECT_NEAR(a, b, 1e-9);
  EXPECT_NEAR(a, oracle::choquet(u, masks), 1e-9);
  EXPECT_NEAR(a, oracle::choquet_mobius(u, masks), 1e-9);
  EXPECT_NEAR(choquet_value(u, cap), a, 0.0);
}

TEST(Choquet, AdditiveCapacityIsWeightedSum) {
  TwoAdditiveCapacity cap;
  cap.singletons = {0.2, 0.3, 0.5};
  EXPECT_NEAR(choquet_value({10, 20, 30}, cap), 2 + 6 + 15, 1e-12);
}

TEST(Choquet, TiesDoNotMatter) {
  TwoAdditiveCapacity cap;
  cap.singletons = {0.3, 0.3, 0.3};
  cap.pairs = {{0, 1, 0.1}};
  EXPECT_NEAR(choquet_capacity_form({5, 5, 5}, cap), 5.0, 1e-12);
  EXPECT_NEAR(choquet_mobius_form({5, 5, 5}, cap), 5.0, 1e-12);
}

}  // namespace
}  // namespace dcm
