#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "dcm/pct.hpp"

// Independent brute-force reference computations used to cross-check the
// library. They share no code with the solvers.
namespace dcm::oracle {

// e_pq for the gap vector d (levels 1-based).
inline Cards cards(const std::vector<Cards>& d, int p, int q) {
  Cards s = 0;
  for (int r = p; r < q; ++r) s += d[static_cast<std::size_t>(r - 1)] + 1;
  return s - 1;
}

inline bool consistent(const PairwiseTable& t) {
  const int n = t.levels();
  for (int p = 1; p <= n; ++p)
    for (int k = p + 1; k <= n; ++k)
      for (int q = k + 1; q <= n; ++q)
        if (t.at(p, k).lo + t.at(k, q).lo + 1 != t.at(p, q).lo) return false;
  return true;
}

// Calls f(d) for every d in [0, bound]^(t-1).
inline void each_gap_vector(int t, Cards bound, const std::function<void(const std::vector<Cards>&)>& f) {
  std::vector<Cards> d(static_cast<std::size_t>(t - 1), 0);
  while (true) {
    f(d);
    std::size_t i = 0;
    while (i < d.size() && d[i] == bound) d[i++] = 0;
    if (i == d.size()) return;
    ++d[i];
  }
}

struct RepairOracle {
  std::size_t z = 0;
  std::set<std::vector<Pair>> minimal_sets;
  bool feasible = false;
};

// Minimal number of given judgments to change, and every modified set that
// attains it, over all d with components <= bound.
inline RepairOracle min_repairs(const PairwiseTable& t, Cards bound) {
  RepairOracle out;
  out.z = static_cast<std::size_t>(-1);
  each_gap_vector(t.levels(), bound, [&](const std::vector<Cards>& d) {
    std::vector<Pair> mod;
    for (const auto& pr : t.pairs()) {
      const Cell& c = t.at(pr.p, pr.q);
      if (c.is_missing()) continue;
      Cards e = cards(d, pr.p, pr.q);
      if (e < c.lo || e > c.hi) mod.push_back(pr);
    }
    if (mod.size() < out.z) {
      out.z = mod.size();
      out.minimal_sets.clear();
    }
    if (mod.size() == out.z) out.minimal_sets.insert(mod);
    out.feasible = true;
  });
  return out;
}

// Every consistent precise table compatible with the bounds, as gap vectors.
inline std::set<std::vector<Cards>> compatible(const PairwiseTable& t, Cards bound) {
  std::set<std::vector<Cards>> out;
  each_gap_vector(t.levels(), bound, [&](const std::vector<Cards>& d) {
    for (const auto& pr : t.pairs())
      if (!t.at(pr.p, pr.q).contains(cards(d, pr.p, pr.q))) return;
    out.insert(d);
  });
  return out;
}

// Walks the raw grid of cell values and keeps the consistent ones.
inline std::size_t grid_consistent_count(const PairwiseTable& t) {
  const auto prs = t.pairs();
  PairwiseTable cur(t.levels());
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == prs.size()) {
      count += consistent(cur) ? 1 : 0;
      return;
    }
    const Cell& c = t.at(prs[i].p, prs[i].q);
    for (Cards v = c.lo; v <= c.hi; ++v) {
      cur.set(prs[i].p, prs[i].q, Cell::exact(v));
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

// mu(A) = sum of Mobius masses of the nonempty subsets of A.
inline double mu(const std::vector<double>& mobius_by_mask, std::uint64_t a) {
  double s = 0.0;
  for (std::uint64_t b = a; b; b = (b - 1) & a) s += mobius_by_mask[b];
  return s;
}

// Choquet integral as the layer sum over thresholds of the upper level sets,
// with the capacity given through a full Mobius mass vector indexed by mask.
inline double choquet(const std::vector<double>& u, const std::vector<double>& mobius_by_mask) {
  std::vector<double> levels(u.begin(), u.end());
  levels.push_back(0.0);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double total = 0.0;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    std::uint64_t above = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] >= levels[k]) above |= std::uint64_t{1} << i;
    total += (levels[k] - levels[k - 1]) * mu(mobius_by_mask, above);
  }
  return total;
}

// Mobius form over every subset: sum of m(A) * min_{i in A} u_i.
inline double choquet_mobius(const std::vector<double>& u, const std::vector<double>& mobius_by_mask) {
  double total = 0.0;
  for (std::uint64_t a = 1; a < mobius_by_mask.size(); ++a) {
    double lo = INFINITY;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (a >> i & 1) lo = std::min(lo, u[i]);
    total += mobius_by_mask[a] * lo;
  }
  return total;
}

// Rank 1 + number of strictly better alternatives, for each alternative.
inline std::vector<std::size_t> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> r(v.size(), 1);
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b)
      if (v[b] > v[a]) ++r[a];
  return r;
}

}  // namespace dcm::oracle
