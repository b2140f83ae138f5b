#include "dcm/consistency.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "search.hpp"

namespace dcm {

SolverOptions solver_options_from_env() {
  SolverOptions opts;
  if (const char* env = std::getenv("DCM_CARD_LIMIT")) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(env, &used);
      if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
      opts.card_limit = v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::Validation, "DCM_CARD_LIMIT must be a positive integer",
                  "DCM_CARD_LIMIT");
    }
  }
  return opts;
}

namespace {

std::vector<Pair> to_pairs(const PairwiseTable& tbl, const std::vector<std::size_t>& idx) {
  std::vector<Pair> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(tbl.pair_at(i));
  return out;
}

std::vector<std::size_t> to_indices(const PairwiseTable& tbl, const std::vector<Pair>& pairs) {
  std::vector<std::size_t> out;
  for (const Pair& pr : pairs) out.push_back(tbl.index(pr.p, pr.q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_no_missing(const PairwiseTable& tbl) {
  for (std::size_t i = 0; i < tbl.cell_count(); ++i)
    if (tbl.at(i).is_missing())
      throw Error(ErrorCode::Validation, "missing cells are not allowed here",
                  to_string(tbl.pair_at(i)));
}

void require_exact(const PairwiseTable& tbl) {
  for (std::size_t i = 0; i < tbl.cell_count(); ++i)
    if (!tbl.at(i).is_exact())
      throw Error(ErrorCode::NonExactCell, "cell is not exact", to_string(tbl.pair_at(i)));
}

void require_exact_or_missing(const PairwiseTable& tbl) {
  for (std::size_t i = 0; i < tbl.cell_count(); ++i)
    if (tbl.at(i).is_interval())
      throw Error(ErrorCode::NonExactCell, "interval cells are not allowed here",
                  to_string(tbl.pair_at(i)));
}

PairwiseTable with_levels(PairwiseTable out, const PairwiseTable& src) {
  out.labels = src.labels;
  out.coordinates = src.coordinates;
  return out;
}

Enumeration scan_tables(const PairwiseTable& tbl, const SolverOptions& opts) {
  auto pb = detail::make_problem(tbl, opts.card_limit);
  Enumeration en;
  auto stats = detail::scan_feasible(pb, [&](const GapVector& d) {
    if (en.tables.size() >= opts.max_results) return false;
    en.gaps.push_back(d);
    en.tables.push_back(with_levels(table_from_gaps(d), tbl));
    return true;
  });
  en.exhaustive = !stats.stopped;
  en.unbounded = stats.unbounded;
  en.domain_bound = stats.free_bound;
  return en;
}

IntervalRepairSolution bound_repair(const PairwiseTable& tbl, const CutSet& cuts,
                                    const SolverOptions& opts, bool* found) {
  auto pb = detail::make_problem(tbl, opts.card_limit);
  for (const auto& cut : cuts) pb.forbidden.push_back(to_indices(tbl, cut));
  auto best = detail::minimize(pb);
  IntervalRepairSolution sol;
  *found = best.has_value();
  if (!best) return sol;
  sol.gaps = best->d;
  sol.witness = with_levels(table_from_gaps(best->d), tbl);
  sol.adjusted = tbl;
  for (std::size_t i : best->modified) {
    Pair pr = tbl.pair_at(i);
    const Cell& c = tbl.at(i);
    Cards e = sol.witness.at(pr.p, pr.q).lo;
    // A precise judgment is replaced; an interval only moves the violated bound.
    BoundChange ch{pr, c.lo, c.hi, c.is_exact() ? e : std::min(c.lo, e),
                   c.is_exact() ? e : std::max(c.hi, e)};
    sol.changes.push_back(ch);
    sol.adjusted.set(pr.p, pr.q,
                     c.is_exact() ? Cell::exact(e) : Cell::interval(ch.new_lo, ch.new_hi));
  }
  return sol;
}

}  // namespace

std::optional<RepairSolution> repair_min_changes(const PairwiseTable& tbl, const CutSet& cuts,
                                                 const SolverOptions& opts) {
  require_exact(tbl);
  auto pb = detail::make_problem(tbl, opts.card_limit);
  for (const auto& cut : cuts) pb.forbidden.push_back(to_indices(tbl, cut));
  auto best = detail::minimize(pb);
  if (!best) return std::nullopt;
  RepairSolution sol;
  sol.gaps = best->d;
  sol.repaired = with_levels(table_from_gaps(best->d), tbl);
  sol.modified = to_pairs(tbl, best->modified);
  for (const Pair& pr : sol.modified)
    sol.deltas.push_back(sol.repaired.at(pr.p, pr.q).lo - tbl.at(pr.p, pr.q).lo);
  return sol;
}

std::vector<RepairSolution> enumerate_repairs(const PairwiseTable& tbl, const SolverOptions& opts) {
  std::vector<RepairSolution> out;
  CutSet cuts;
  while (out.size() < opts.max_results) {
    auto sol = repair_min_changes(tbl, cuts, opts);
    if (!sol) break;
    out.push_back(*sol);
    // A consistent input has a single answer; an empty cut would forbid everything.
    if (sol->modified.empty()) break;
    cuts.push_back(sol->modified);
  }
  return out;
}

Completion complete_missing(const PairwiseTable& tbl, const SolverOptions& opts) {
  require_exact_or_missing(tbl);
  bool any = false;
  for (std::size_t i = 0; i < tbl.cell_count(); ++i) any = any || tbl.at(i).is_exact();
  if (!any) throw Error(ErrorCode::Validation, "at least one cell must be exact");
  auto best = detail::minimize(detail::make_problem(tbl, opts.card_limit));
  if (!best) throw Error(ErrorCode::Infeasible, "no consistent completion exists");
  Completion out;
  out.z = best->modified.size();
  out.gaps = best->d;
  out.completion = with_levels(table_from_gaps(best->d), tbl);
  out.flagged = to_pairs(tbl, best->modified);
  for (const Pair& pr : out.flagged)
    out.deltas.push_back(out.completion.at(pr.p, pr.q).lo - tbl.at(pr.p, pr.q).lo);
  return out;
}

Enumeration enumerate_completions(const PairwiseTable& tbl, const SolverOptions& opts) {
  require_exact_or_missing(tbl);
  auto en = scan_tables(tbl, opts);
  if (en.tables.empty())
    throw Error(ErrorCode::Infeasible,
                "the given judgments are inconsistent; repair them before completing");
  return en;
}

Enumeration enumerate_precise_extractions(const PairwiseTable& tbl, const SolverOptions& opts) {
  auto en = scan_tables(tbl, opts);
  if (en.tables.empty())
    throw Error(ErrorCode::Infeasible,
                "no consistent precise table fits the bounds; repair them first");
  return en;
}

std::uint64_t count_extractable(const PairwiseTable& tbl) {
  require_no_missing(tbl);
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < tbl.cell_count(); ++i) {
    const Cell& c = tbl.at(i);
    auto width = static_cast<std::uint64_t>(c.hi - c.lo + 1);
    if (n > std::numeric_limits<std::uint64_t>::max() / width)
      throw Error(ErrorCode::DomainExceeded, "extractable count overflows 64 bits");
    n *= width;
  }
  return n;
}

std::vector<Pair> IntervalRepairSolution::modified() const {
  std::vector<Pair> out;
  for (const auto& c : changes) out.push_back(c.pair);
  return out;
}

IntervalRepairSolution interval_repair(const PairwiseTable& tbl, const SolverOptions& opts) {
  require_no_missing(tbl);
  return mixed_repair(tbl, opts);
}

IntervalRepairSolution mixed_repair(const PairwiseTable& tbl, const SolverOptions& opts) {
  bool found = false;
  auto sol = bound_repair(tbl, {}, opts, &found);
  if (!found) throw Error(ErrorCode::Infeasible, "no repair exists");
  return sol;
}

std::vector<IntervalRepairSolution> enumerate_interval_repairs(const PairwiseTable& tbl,
                                                               const SolverOptions& opts) {
  std::vector<IntervalRepairSolution> out;
  CutSet cuts;
  while (out.size() < opts.max_results) {
    bool found = false;
    auto sol = bound_repair(tbl, cuts, opts, &found);
    if (!found) break;
    out.push_back(sol);
    if (sol.changes.empty()) break;
    cuts.push_back(sol.modified());
  }
  return out;
}

}  // namespace dcm
