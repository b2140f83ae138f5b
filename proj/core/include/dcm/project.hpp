#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcm/schema.hpp"

namespace dcm {

enum class Direction { Max, Min };
enum class VariantMode { Auto, Fixed, Enumerate, Sample };

struct Criterion {
  std::string id;
  std::string label;
  Direction direction = Direction::Max;
  PairwiseTable table;
  // Precise table chosen by the decision maker among the compatible ones.
  std::optional<PairwiseTable> precise_table;
  std::optional<Anchor> low;   // default: level 1 at 0
  std::optional<Anchor> high;  // default: level t at 100
  VariantMode variants = VariantMode::Auto;

  Anchor low_anchor() const { return low.value_or(Anchor{1, 0.0}); }
  Anchor high_anchor() const { return high.value_or(Anchor{table.levels(), 100.0}); }
};

struct Performance {
  enum class Kind { Value, Level, Utility };
  Kind kind = Kind::Value;
  double value = 0.0;
};

struct Alternative {
  std::string id;
  std::string label;
  std::vector<Performance> performances;  // aligned with Project::criteria
};

struct CapacitySpec {
  std::vector<InteractionPair> pairs;
  std::vector<std::vector<DummyProject>> classes;
  std::optional<std::vector<Cards>> cards;
  std::optional<PairwiseTable> table;  // comparison table over the classes
  double ratio = 1.0;
  double base = 1.0;
};

// Cached results as serialized documents; any upstream edit clears them.
struct DerivedCache {
  std::optional<json> scales;
  std::optional<json> capacity;
  std::optional<json> evaluation;
  std::optional<json> smaa;
  bool empty() const { return !scales && !capacity && !evaluation && !smaa; }
};

struct Project {
  std::string name;
  std::vector<Criterion> criteria;
  std::vector<Alternative> alternatives;
  std::optional<CapacitySpec> capacity;
  DerivedCache derived;

  std::size_t criterion_index(const std::string& id) const;  // NotFound if absent
  DummyProjectRanking ranking() const;

  void set_table(std::size_t c, const PairwiseTable& tbl);
  void set_precise_table(std::size_t c, const std::optional<PairwiseTable>& tbl);
  void set_capacity(const std::optional<CapacitySpec>& spec);
  void set_alternatives(const std::vector<Alternative>& alts);
};

Project project_from_json(const json& j);
json project_to_json(const Project& p);
Project load_project(const std::string& path);
void save_project(const Project& p, const std::string& path);

std::string dump_json(const json& j, bool pretty = true);
json read_json_file(const std::string& path);

}  // namespace dcm
