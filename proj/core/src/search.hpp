#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "dcm/pct.hpp"

namespace dcm::detail {

struct Bound {
  bool given = false;
  Cards lo = 0;
  Cards hi = 0;
};

struct Problem {
  int t = 0;
  std::vector<Bound> cells;                          // row-major
  std::vector<std::vector<std::size_t>> forbidden;   // sorted cell indices
  Cards free_limit = kDefaultCardLimit;
};

Problem make_problem(const PairwiseTable& tbl, Cards card_limit);

struct Candidate {
  GapVector d;
  std::vector<std::size_t> modified;  // sorted cell indices
  Cards deviation = 0;
  Cards signed_deviation = 0;
};

// Minimum number of cells outside their bounds over all gap vectors, ties
// broken by total deviation, signed deviation, modified set, then d.
std::optional<Candidate> minimize(const Problem& pb);

struct FeasibleScan {
  bool unbounded = false;
  bool stopped = false;
  Cards free_bound = 0;
};

// Visits every gap vector meeting all bounds in lexicographic order until
// `visit` returns false.
FeasibleScan scan_feasible(const Problem& pb, const std::function<bool(const GapVector&)>& visit);

}  // namespace dcm::detail
