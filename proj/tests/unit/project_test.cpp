#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include "dcm/project.hpp"
#include "support.hpp"

namespace dcm {
namespace {

json quarry_json() { return read_json_file(test::fixture("quarry.json")); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::Validation;
}

std::string location_of(const json& j) {
  try {
    project_from_json(j);
  } catch (const Error& e) {
    return e.location();
  }
  return "no error";
}

TEST(Project, RoundTripIsIdentical) {
  auto p = test::quarry();
  std::string once = dump_json(project_to_json(p));
  std::string twice = dump_json(project_to_json(project_from_json(json::parse(once))));
  EXPECT_EQ(once, twice);
  auto dir = std::filesystem::temp_directory_path() / "dcm_project_test";
  std::filesystem::create_directories(dir);
  save_project(p, (dir / "q.json").string());
  EXPECT_EQ(dump_json(project_to_json(load_project((dir / "q.json").string()))), once);
  std::filesystem::remove_all(dir);
}

TEST(Project, DerivedCacheRoundTrips) {
  auto p = test::quarry();
  p.derived.smaa = json{{"note", 1}};
  auto q = project_from_json(project_to_json(p));
  ASSERT_TRUE(q.derived.smaa.has_value());
  EXPECT_EQ(*q.derived.smaa, *p.derived.smaa);
}

TEST(Project, CriteriaOnlyIsValid) {
  json j = quarry_json();
  j.erase("alternatives");
  j.erase("capacity");
  auto p = project_from_json(j);
  EXPECT_EQ(p.criteria.size(), 6u);
  EXPECT_TRUE(p.alternatives.empty());
}

TEST(Project, UnsupportedVersion) {
  json j = quarry_json();
  j["version"] = 999;
  EXPECT_EQ(code_of([&] { project_from_json(j); }), ErrorCode::SchemaError);
  EXPECT_EQ(location_of(j), "/version");
}

TEST(Project, UnknownFieldsCarryTheirPosition) {
  json j = quarry_json();
  j["criteria"][2]["table"]["cells"][4]["colour"] = "red";
  EXPECT_EQ(location_of(j), "/criteria/2/table/cells/4/colour");
  j = quarry_json();
  j["extra"] = true;
  EXPECT_EQ(location_of(j), "/extra");
}

TEST(Project, DirectionMustMatchCoordinates) {
  json j = quarry_json();
  j["criteria"][0]["direction"] = "max";
  EXPECT_EQ(location_of(j), "/criteria/0/direction");
}

TEST(Project, PreciseTableMustFit) {
  json j = quarry_json();
  j["criteria"][2]["precise_table"]["cells"][0]["values"] = json::array({5});
  EXPECT_EQ(location_of(j), "/criteria/2/precise_table");
}

TEST(Project, CapacityNeedsOneSource) {
  json j = quarry_json();
  j["capacity"]["cards"] = json::array({1, 1, 0, 1, 2, 4});
  EXPECT_EQ(location_of(j), "/capacity");
  j["capacity"].erase("table");
  auto p = project_from_json(j);
  EXPECT_EQ(p.ranking().cards, (std::vector<Cards>{1, 1, 0, 1, 2, 4}));
}

TEST(Project, PerformanceChecks) {
  json j = quarry_json();
  j["alternatives"][0]["performances"]["g2"] = json{{"level", 9}};
  EXPECT_EQ(location_of(j), "/alternatives/0/performances/g2/level");
  j = quarry_json();
  j["alternatives"][0]["performances"].erase("g6");
  EXPECT_EQ(location_of(j), "/alternatives/0/performances");
}

TEST(Project, MissingFileIsIoError) {
  EXPECT_EQ(code_of([] { load_project("/nonexistent/dcm.json"); }), ErrorCode::IoError);
}

TEST(Project, MalformedJsonIsSchemaError) {
  auto path = std::filesystem::temp_directory_path() / "dcm_bad.json";
  std::ofstream(path) << "{\"version\": 1,";
  EXPECT_EQ(code_of([&] { load_project(path.string()); }), ErrorCode::SchemaError);
  std::filesystem::remove(path);
}

TEST(Project, UnknownCriterionLookup) {
  EXPECT_EQ(code_of([] { test::quarry().criterion_index("g9"); }), ErrorCode::NotFound);
}

TEST(Schema, TableRoundTrip) {
  auto t = test::load_table("g5_mixed");
  auto back = table_from_json(table_to_json(t));
  EXPECT_EQ(back, t);
  EXPECT_EQ(back.labels, t.labels);
}

TEST(Schema, CellErrors) {
  json j = {{"levels", 3}, {"cells", json::array({{{"p", 1}, {"q", 2}, {"kind", "interval"}, {"values", {3, 1}}}})}};
  try {
    table_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SchemaError);
    EXPECT_EQ(e.location(), "/cells/0/values");
  }
  j["cells"][0] = {{"p", 2}, {"q", 2}, {"kind", "exact"}, {"values", {1}}};
  EXPECT_THROW(table_from_json(j), Error);
  j["cells"] = json::array({{{"p", 1}, {"q", 2}, {"kind", "exact"}, {"values", {1}}},
                            {{"p", 1}, {"q", 2}, {"kind", "exact"}, {"values", {2}}}});
  EXPECT_THROW(table_from_json(j), Error);
}

TEST(Schema, OmittedCellsAreMissing) {
  json j = {{"levels", 3}, {"cells", json::array()}};
  auto t = table_from_json(j);
  EXPECT_TRUE(t.at(1, 3).is_missing());
}

}  // namespace
}  // namespace dcm
