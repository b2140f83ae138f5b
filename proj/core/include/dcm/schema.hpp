#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dcm/choquet.hpp"
#include "dcm/consistency.hpp"
#include "dcm/pct.hpp"
#include "dcm/sampling.hpp"
#include "dcm/scale.hpp"
#include "dcm/smaa.hpp"

namespace dcm {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Strict object reader: every key must be consumed, otherwise SchemaError
// points at the first unknown one.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string location);

  bool has(const std::string& key) const;
  const json& required(const std::string& key);
  const json* optional(const std::string& key);
  std::string path(const std::string& key) const;
  const std::string& location() const { return loc_; }
  void finish() const;

 private:
  const json& j_;
  std::string loc_;
  std::vector<std::string> used_;
};

std::string pointer_join(const std::string& base, const std::string& key);
std::string pointer_join(const std::string& base, std::size_t index);

std::int64_t read_int(const json& j, const std::string& loc);
double read_number(const json& j, const std::string& loc);
std::string read_string(const json& j, const std::string& loc);
void check_version(const json& j, const std::string& loc);

// {code, message, location} body for a failed request.
json error_body(const Error& e);

// Table document: {version?, levels, cells}. `levels` is a count or a list of
// {label?, coordinate?}.
PairwiseTable table_from_json(const json& j, const std::string& loc = "");
json table_to_json(const PairwiseTable& tbl, bool with_version = true);
json continuous_table_to_json(const ContinuousTable& tbl);

json violations_to_json(const std::vector<Violation>& v);
json repair_to_json(const RepairSolution& r);
json interval_repair_to_json(const IntervalRepairSolution& r);
json enumeration_to_json(const Enumeration& en, std::size_t offset = 0,
                         std::size_t count = static_cast<std::size_t>(-1));
json completion_to_json(const Completion& c);
json scale_to_json(const ValueScale& s);
json smaa_to_json(const SmaaResult& r, const std::vector<std::string>& alternatives);

// "exact", "interval", "missing" or "mixed".
std::string table_kind(const PairwiseTable& tbl);

// Consistency report: violations for exact tables, minimal repair size otherwise.
json check_to_json(const PairwiseTable& tbl, const SolverOptions& opts = {});

struct RepairListing {
  std::string kind;
  json repairs;                        // indexed array
  std::vector<PairwiseTable> results;  // table to adopt for each repair
};

// All cut-enumerated minimal repairs of a table of any kind.
RepairListing list_repairs(const PairwiseTable& tbl, const SolverOptions& opts = {});

}  // namespace dcm
