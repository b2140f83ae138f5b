#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dcm/pct.hpp"

namespace dcm {

struct SamplerOptions {
  std::size_t burn_in = 1000;
  std::size_t thinning = 1;
};

// Difference-constraint view of the real-valued tables compatible with an
// Exact/Interval table, expressed in level potentials x_1 = 0 < x_2 < ... < x_t.
class GapPolytope {
 public:
  explicit GapPolytope(const PairwiseTable& tbl);

  int levels() const { return t_; }
  // Free coordinates left after removing implied equalities.
  std::size_t dimension() const { return free_.size(); }
  // Shortest-path bound on x_j - x_i (1-based levels).
  double bound(int i, int j) const;
  bool contains(const ContinuousTable& tbl, double tol = 1e-9) const;

 private:
  friend class HitAndRun;
  struct Edge {
    int from;
    int to;
    double w;
  };
  int t_ = 0;
  std::vector<Cards> dist_;
  std::vector<int> cls_;        // representative level of each level
  std::vector<double> offset_;  // x_k - x_{cls_k}
  std::vector<int> free_;       // free representatives (level 1 excluded)
  std::vector<Edge> cross_;     // constraints between different classes
  std::vector<Cell> cells_;
};

class HitAndRun {
 public:
  HitAndRun(const GapPolytope& poly, std::uint64_t seed, SamplerOptions opts = {});
  ContinuousTable next();

 private:
  void step();
  ContinuousTable current() const;

  const GapPolytope& poly_;
  SamplerOptions opts_;
  std::mt19937_64 rng_;
  std::vector<double> y_;  // indexed by level, only class representatives used
  std::vector<double> dir_;
};

std::vector<ContinuousTable> sample_continuous_tables(const PairwiseTable& tbl, std::size_t n,
                                                      std::uint64_t seed,
                                                      const SamplerOptions& opts = {});

}  // namespace dcm
