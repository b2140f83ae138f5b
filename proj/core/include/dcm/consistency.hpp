#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dcm/pct.hpp"

namespace dcm {

struct SolverOptions {
  // Bound on every input card count and on gaps that no judgment constrains.
  Cards card_limit = kDefaultCardLimit;
  // Cap on the number of tables or repairs an enumeration returns.
  std::size_t max_results = 100000;
};

// Reads DCM_CARD_LIMIT when set, otherwise the default.
SolverOptions solver_options_from_env();

struct RepairSolution {
  std::vector<Pair> modified;   // row-major order
  std::vector<Cards> deltas;    // signed change per modified cell
  PairwiseTable repaired;
  GapVector gaps;
  std::size_t z() const { return modified.size(); }
};

// Previously returned modified sets; a candidate must not contain any of them.
using CutSet = std::vector<std::vector<Pair>>;

std::optional<RepairSolution> repair_min_changes(const PairwiseTable& tbl, const CutSet& cuts = {},
                                                 const SolverOptions& opts = {});
std::vector<RepairSolution> enumerate_repairs(const PairwiseTable& tbl,
                                              const SolverOptions& opts = {});

struct Completion {
  std::size_t z = 0;
  std::vector<Pair> flagged;
  std::vector<Cards> deltas;
  PairwiseTable completion;
  GapVector gaps;
};

Completion complete_missing(const PairwiseTable& tbl, const SolverOptions& opts = {});

struct Enumeration {
  std::vector<PairwiseTable> tables;
  std::vector<GapVector> gaps;
  bool exhaustive = true;   // false when max_results cut the listing short
  bool unbounded = false;   // some gap is constrained by no judgment
  Cards domain_bound = 0;   // bound used for unconstrained gaps
};

Enumeration enumerate_completions(const PairwiseTable& tbl, const SolverOptions& opts = {});
Enumeration enumerate_precise_extractions(const PairwiseTable& tbl,
                                          const SolverOptions& opts = {});

// Raw grid size: product of (hi - lo + 1) over all cells.
std::uint64_t count_extractable(const PairwiseTable& tbl);

struct BoundChange {
  Pair pair;
  Cards old_lo = 0;
  Cards old_hi = 0;
  Cards new_lo = 0;
  Cards new_hi = 0;
};

struct IntervalRepairSolution {
  std::vector<BoundChange> changes;  // row-major order
  PairwiseTable adjusted;            // input with the new bounds applied
  PairwiseTable witness;             // consistent precise table inside `adjusted`
  GapVector gaps;
  std::size_t z() const { return changes.size(); }
  std::vector<Pair> modified() const;
};

IntervalRepairSolution interval_repair(const PairwiseTable& tbl, const SolverOptions& opts = {});
IntervalRepairSolution mixed_repair(const PairwiseTable& tbl, const SolverOptions& opts = {});

// Successive minimal bound repairs, each avoiding every earlier modified set.
std::vector<IntervalRepairSolution> enumerate_interval_repairs(const PairwiseTable& tbl,
                                                               const SolverOptions& opts = {});

}  // namespace dcm
