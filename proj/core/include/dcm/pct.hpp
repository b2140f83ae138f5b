#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcm/errors.hpp"

namespace dcm {

using Cards = std::int64_t;

// Default upper bound on any card count accepted by the solvers.
inline constexpr Cards kDefaultCardLimit = 10000;

// Level pair (p,q) with 1 <= p < q <= t, 1 being the worst level.
struct Pair {
  int p = 0;
  int q = 0;
  auto operator<=>(const Pair&) const = default;
};

std::string to_string(const Pair& pr);

struct Cell {
  enum class Kind { Exact, Interval, Missing };

  Kind kind = Kind::Missing;
  Cards lo = 0;
  Cards hi = 0;

  static Cell exact(Cards e);
  static Cell interval(Cards lo, Cards hi);
  static Cell missing() { return {}; }

  bool is_exact() const { return kind == Kind::Exact; }
  bool is_interval() const { return kind == Kind::Interval; }
  bool is_missing() const { return kind == Kind::Missing; }
  bool contains(Cards e) const { return kind == Kind::Missing || (lo <= e && e <= hi); }

  bool operator==(const Cell&) const = default;
};

// Upper-triangular comparison table over t ordered levels, stored row-major:
// (1,2),(1,3),...,(1,t),(2,3),...,(t-1,t).
class PairwiseTable {
 public:
  PairwiseTable() = default;
  explicit PairwiseTable(int t);

  int levels() const { return t_; }
  std::size_t cell_count() const { return cells_.size(); }

  std::size_t index(int p, int q) const;
  Pair pair_at(std::size_t idx) const;
  std::vector<Pair> pairs() const;

  const Cell& at(int p, int q) const { return cells_[index(p, q)]; }
  const Cell& at(std::size_t idx) const { return cells_.at(idx); }
  void set(int p, int q, Cell c);

  // Value of an Exact cell; NonExactCell otherwise.
  Cards exact(int p, int q) const;

  bool all_exact() const;
  bool has_missing() const;
  bool has_interval() const;

  std::vector<std::string> labels;
  std::vector<double> coordinates;

  bool operator==(const PairwiseTable& o) const {
    return t_ == o.t_ && cells_ == o.cells_;
  }

 private:
  int t_ = 0;
  std::vector<Cell> cells_;
};

// d_r = cards between l_r and l_{r+1}; size t-1.
using GapVector = std::vector<Cards>;

struct Violation {
  int p = 0;
  int k = 0;
  int q = 0;
  Cards lhs = 0;
  Cards rhs = 0;
  bool operator==(const Violation&) const = default;
};

// Real-valued table used by the continuous sampler.
class ContinuousTable {
 public:
  ContinuousTable() = default;
  explicit ContinuousTable(int t);

  int levels() const { return t_; }
  double at(int p, int q) const;
  void set(int p, int q, double v);
  const std::vector<double>& values() const { return values_; }

 private:
  int t_ = 0;
  std::vector<double> values_;
};

Cards cards_between(const GapVector& d, int p, int q);

PairwiseTable table_from_gaps(const GapVector& d);
PairwiseTable complete_from_consecutive(const GapVector& consecutive);
std::vector<Violation> check_consistency(const PairwiseTable& tbl);
std::optional<GapVector> gaps_from_table(const PairwiseTable& tbl);
GapVector gaps_or_throw(const PairwiseTable& tbl);

// Largest deviation from e_pk + e_kq + 1 = e_pq over all triples.
double consistency_residual(const ContinuousTable& tbl);
ContinuousTable to_continuous(const PairwiseTable& tbl);

std::string export_graph(const PairwiseTable& tbl, const std::string& name = "pct");

struct Bar {
  Pair pair;
  Cards length = 0;
};
std::vector<Bar> export_bars(const PairwiseTable& tbl);

// Rejects coordinates that are not strictly monotone and label/coordinate
// lists of the wrong length.
void validate_levels(const PairwiseTable& tbl);

}  // namespace dcm
