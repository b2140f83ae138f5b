#pragma once

#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "dcm/pct.hpp"
#include "dcm/project.hpp"
#include "dcm/schema.hpp"

namespace dcm::test {

// One upper-triangle entry: a value, an interval {lo, hi}, or missing.
struct E {
  Cell cell;
  E(Cards v) : cell(Cell::exact(v)) {}  // NOLINT
  E(Cards lo, Cards hi) : cell(Cell::interval(lo, hi)) {}
  E() : cell(Cell::missing()) {}
};
inline const E Q{};

// Builds a table from its rows above the diagonal.
inline PairwiseTable rows(int t, std::vector<std::vector<E>> r) {
  PairwiseTable tbl(t);
  for (int p = 1; p < t; ++p)
    for (int q = p + 1; q <= t; ++q) tbl.set(p, q, r.at(p - 1).at(q - p - 1).cell);
  return tbl;
}

inline std::string fixture(const std::string& rel) { return std::string(DCM_FIXTURE_DIR) + "/" + rel; }

inline PairwiseTable load_table(const std::string& name) {
  return table_from_json(read_json_file(fixture("tables/" + name + ".json")));
}

inline Project quarry() { return load_project(fixture("quarry.json")); }

// Exact values row by row, for compact comparisons.
inline std::vector<Cards> flat(const PairwiseTable& t) {
  std::vector<Cards> out;
  for (const auto& pr : t.pairs()) out.push_back(t.at(pr.p, pr.q).lo);
  return out;
}

inline std::vector<Pair> pairs(std::initializer_list<int> codes) {
  std::vector<Pair> out;
  for (int c : codes) out.push_back({c / 10, c % 10});
  return out;
}

}  // namespace dcm::test
