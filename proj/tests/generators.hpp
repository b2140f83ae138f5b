#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "dcm/choquet.hpp"
#include "dcm/pct.hpp"

// Hand-rolled generators shared by the property tests and the acceptance run.
namespace dcm::test::gen {

// Calls f for every table over t levels whose cells take values from `choices`.
inline void each_table(int t, const std::vector<Cell>& choices, const std::function<void(const PairwiseTable&)>& f) {
  PairwiseTable tbl(t);
  const auto prs = tbl.pairs();
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == prs.size()) return f(tbl);
    for (const auto& c : choices) {
      tbl.set(prs[i].p, prs[i].q, c);
      rec(i + 1);
    }
  };
  rec(0);
}

inline std::vector<Cell> exact_values(Cards hi) {
  std::vector<Cell> out;
  for (Cards v = 0; v <= hi; ++v) out.push_back(Cell::exact(v));
  return out;
}

inline std::vector<Cell> intervals(Cards hi) {
  std::vector<Cell> out;
  for (Cards a = 0; a <= hi; ++a)
    for (Cards b = a; b <= hi; ++b) out.push_back(a == b ? Cell::exact(a) : Cell::interval(a, b));
  return out;
}

inline PairwiseTable random_table(std::mt19937_64& rng, int t, Cards hi, double p_missing, double p_interval) {
  PairwiseTable tbl(t);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (const auto& pr : tbl.pairs()) {
    Cards span = hi * (pr.q - pr.p);
    std::uniform_int_distribution<Cards> v(0, span);
    double c = coin(rng);
    if (c < p_missing) continue;
    Cards a = v(rng), b = v(rng);
    if (c < p_missing + p_interval)
      tbl.set(pr.p, pr.q, Cell::interval(std::min(a, b), std::max(a, b)));
    else
      tbl.set(pr.p, pr.q, Cell::exact(a));
  }
  return tbl;
}

// Random valid 2-additive capacity by rejection.
inline TwoAdditiveCapacity random_capacity(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> pos(0.0, 1.0), inter(-0.4, 0.4), coin(0.0, 1.0);
  while (true) {
    TwoAdditiveCapacity cap;
    for (int j = 0; j < n; ++j) cap.singletons.push_back(pos(rng));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < 0.4) cap.pairs.push_back({i, j, inter(rng)});
    double total = 0.0;
    for (double s : cap.singletons) total += s;
    for (const auto& pt : cap.pairs) total += pt.m;
    if (total <= 0.1) continue;
    for (double& s : cap.singletons) s /= total;
    for (auto& pt : cap.pairs) pt.m /= total;
    if (validate_2additive(cap).empty()) return cap;
  }
}

}  // namespace dcm::test::gen
