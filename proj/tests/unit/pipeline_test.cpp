#include <gtest/gtest.h>

#include "dcm/pipeline.hpp"
#include "support.hpp"

namespace dcm {
namespace {

void expect_ladder(const ValueScale& s, const std::vector<double>& u, double tol = 1e-3) {
  ASSERT_EQ(s.utilities.size(), u.size());
  for (std::size_t k = 0; k < u.size(); ++k) EXPECT_NEAR(s.utilities[k], u[k], tol) << "level " << k + 1;
}

TEST(Pipeline, QuarryScales) {
  auto scales = build_scales(test::quarry());
  ASSERT_EQ(scales.size(), 6u);
  EXPECT_NEAR(scales[0].scale.alpha, 10.0, 1e-3);
  EXPECT_EQ(scales[0].source, "table");
  EXPECT_NEAR(scales[1].scale.alpha, 6.667, 1e-3);
  expect_ladder(scales[1].scale, {0, 6.667, 20, 33.333, 53.333, 73.333, 100});
  EXPECT_EQ(scales[1].source, "extraction");
  EXPECT_EQ(test::flat(scales[1].precise),
            (std::vector<Cards>{0, 2, 4, 7, 10, 14, 1, 3, 6, 9, 13, 1, 4, 7, 11, 2, 5, 9, 2, 6, 3}));
  EXPECT_NEAR(scales[2].scale.alpha, 5.263, 1e-3);
  expect_ladder(scales[2].scale, {0, 10.526, 21.053, 36.842, 52.632, 73.684, 100});
  EXPECT_NEAR(scales[3].scale.alpha, 11.111, 1e-3);
  expect_ladder(scales[3].scale, {0, 22.222, 44.444, 66.667, 100});
  EXPECT_NEAR(scales[4].scale.alpha, 9.091, 1e-3);
  expect_ladder(scales[4].scale, {0, 9.091, 18.182, 36.364, 54.545, 72.727, 100});
  EXPECT_EQ(scales[4].source, "precise_table");
  expect_ladder(scales[5].scale, {0, 100});
}

TEST(Pipeline, QuarryUtilities) {
  auto p = test::quarry();
  auto u = utility_matrix(p, build_scales(p));
  std::vector<std::vector<double>> scores{{98.8, 20.00, 0.0000, 11.111, 36.364, 100.00},
                                          {98.2, 20.00, 52.630, 100.00, 54.546, 100.00},
                                          {96.4, 0.000, 73.682, 22.222, 100.00, 100.00},
                                          {95.2, 0.000, 100.00, 66.666, 72.728, 100.00},
                                          {16.0, 100.0, 100.00, 0.000, 18.182, 0.0000}};
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_NEAR(u[a][j], scores[a][j], 3e-3) << a << "," << j;
}

TEST(Pipeline, EvaluationRanking) {
  auto ev = evaluate_project(test::quarry());
  ASSERT_EQ(ev.values.size(), 5u);
  EXPECT_NEAR(ev.values[0], 32.9999, 1e-3);
  EXPECT_NEAR(ev.values[3], 67.4332, 1e-3);
  EXPECT_NEAR(ev.values[4], 43.3712, 1e-3);
  EXPECT_EQ(ev.ranking, (std::vector<std::size_t>{3, 1, 2, 4, 0}));
}

TEST(Pipeline, EditInvalidatesCache) {
  auto p = test::quarry();
  refresh_derived(p);
  EXPECT_TRUE(p.derived.scales && p.derived.capacity && p.derived.evaluation);
  auto before = *p.derived.evaluation;
  auto t = p.criteria[0].table;
  t.set(1, 2, Cell::exact(1));
  t.set(1, 3, Cell::exact(4));
  t.set(1, 4, Cell::exact(6));
  t.set(1, 5, Cell::exact(7));
  p.set_table(0, t);
  EXPECT_FALSE(p.derived.evaluation.has_value());
  EXPECT_FALSE(p.derived.scales.has_value());
  EXPECT_TRUE(p.derived.capacity.has_value());
  refresh_derived(p);
  EXPECT_NE(*p.derived.evaluation, before);
  EXPECT_EQ(*p.derived.evaluation, evaluation_to_json(evaluate_project(p)));
}

TEST(Pipeline, InconsistentCriterionBlocksScales) {
  auto p = test::quarry();
  p.set_table(0, test::load_table("s61_inconsistent"));
  try {
    build_scales(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentTable);
  }
}

TEST(Pipeline, VariantsFollowTheAutoRule) {
  auto p = test::quarry();
  std::string mode;
  EXPECT_EQ(criterion_variants(p, 0, SmaaMode::Enumerate, 0, 0, {}, &mode).variants.size(), 1u);
  EXPECT_EQ(mode, "fixed");
  EXPECT_EQ(criterion_variants(p, 2, SmaaMode::Enumerate, 0, 0, {}, &mode).variants.size(), 7u);
  EXPECT_EQ(mode, "enumerate");
  EXPECT_EQ(criterion_variants(p, 4, SmaaMode::Enumerate, 0, 0, {}, &mode).variants.size(), 8u);
  EXPECT_EQ(criterion_variants(p, 2, SmaaMode::Sample, 30, 4, {}, &mode).variants.size(), 30u);
  EXPECT_EQ(mode, "sample");
  EXPECT_EQ(criterion_variants(p, 4, SmaaMode::Sample, 30, 4, {}, &mode).variants.size(), 8u);
  EXPECT_EQ(mode, "enumerate");
}

TEST(Pipeline, SampleModeNeedsSeed) {
  SmaaRequest req;
  req.mode = SmaaMode::Sample;
  EXPECT_THROW(run_project_smaa(test::quarry(), req), Error);
}

TEST(Pipeline, EnumeratedSmaaRowsSumToHundred) {
  auto run = run_project_smaa(test::quarry(), {});
  EXPECT_EQ(run.result.combination_count, 56u);
  for (const auto& row : run.result.b()) {
    double s = 0;
    for (double v : row) s += v;
    EXPECT_NEAR(s, 100.0, 1e-9);
  }
}

}  // namespace
}  // namespace dcm
