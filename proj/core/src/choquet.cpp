#include "dcm/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dcm {

std::vector<Cards> cards_from_table(const PairwiseTable& tbl) { return gaps_or_throw(tbl); }

double TwoAdditiveCapacity::mu(std::uint64_t subset) const {
  double s = 0.0;
  for (std::size_t j = 0; j < singletons.size(); ++j)
    if (subset >> j & 1U) s += singletons[j];
  for (const auto& pt : pairs)
    if ((subset >> pt.i & 1U) && (subset >> pt.j & 1U)) s += pt.m;
  return s;
}

double TwoAdditiveCapacity::mu(const std::vector<int>& subset) const {
  std::uint64_t mask = 0;
  for (int j : subset) {
    if (j < 0 || j >= criteria())
      throw Error(ErrorCode::Validation, "criterion index out of range");
    mask |= std::uint64_t{1} << j;
  }
  return mu(mask);
}

namespace {

void check_ranking(const DummyProjectRanking& r) {
  const int n = r.criteria;
  if (n < 1 || n > 63) throw Error(ErrorCode::BadRanking, "criterion count must be in 1..63");
  for (const auto& pr : r.pairs)
    if (pr.i == pr.j || pr.i < 0 || pr.j < 0 || pr.i >= n || pr.j >= n)
      throw Error(ErrorCode::BadRanking, "interacting pair must join two distinct criteria");
  for (std::size_t a = 0; a < r.pairs.size(); ++a)
    for (std::size_t b = a + 1; b < r.pairs.size(); ++b) {
      auto lo_a = std::minmax(r.pairs[a].i, r.pairs[a].j);
      auto lo_b = std::minmax(r.pairs[b].i, r.pairs[b].j);
      if (lo_a == lo_b) throw Error(ErrorCode::BadRanking, "interacting pair listed twice");
    }
}

int project_slot(const DummyProjectRanking& r, const DummyProject& dp) {
  if (!dp.is_pair()) {
    if (dp.i < 0 || dp.i >= r.criteria)
      throw Error(ErrorCode::BadRanking, "dummy project refers to an unknown criterion");
    return dp.i;
  }
  auto key = std::minmax(dp.i, dp.j);
  for (std::size_t k = 0; k < r.pairs.size(); ++k)
    if (std::minmax(r.pairs[k].i, r.pairs[k].j) == key)
      return r.criteria + static_cast<int>(k);
  throw Error(ErrorCode::BadRanking, "pair project is not a declared interacting pair");
}

}  // namespace

CapacityElicitation capacity_from_dcm(const DummyProjectRanking& ranking) {
  check_ranking(ranking);
  const int n = ranking.criteria;
  const std::size_t total = static_cast<std::size_t>(n) + ranking.pairs.size();
  std::vector<int> cls(total, -1);
  for (std::size_t h = 0; h < ranking.classes.size(); ++h) {
    if (ranking.classes[h].empty()) throw Error(ErrorCode::BadRanking, "empty class in ranking");
    for (const auto& dp : ranking.classes[h]) {
      auto slot = static_cast<std::size_t>(project_slot(ranking, dp));
      if (cls[slot] >= 0) throw Error(ErrorCode::BadRanking, "dummy project ranked twice");
      cls[slot] = static_cast<int>(h);
    }
  }
  for (int c : cls)
    if (c < 0) throw Error(ErrorCode::BadRanking, "every dummy project must be ranked");

  CapacityElicitation out;
  out.ranking = build_ratio_weights(ranking.classes.size(), ranking.cards, ranking.base,
                                    ranking.ratio);
  for (int j = 0; j < n; ++j) out.projects.push_back({j, -1});
  for (const auto& pr : ranking.pairs) out.projects.push_back({std::min(pr.i, pr.j), std::max(pr.i, pr.j)});
  for (std::size_t k = 0; k < total; ++k)
    out.w.push_back(out.ranking.weights[static_cast<std::size_t>(cls[k])]);
  out.w_bar = out.w;
  for (std::size_t k = static_cast<std::size_t>(n); k < total; ++k) {
    const auto& dp = out.projects[k];
    out.w_bar[k] = out.w[k] - out.w[static_cast<std::size_t>(dp.i)] -
                   out.w[static_cast<std::size_t>(dp.j)];
  }
  out.w_bar_total = std::accumulate(out.w_bar.begin(), out.w_bar.end(), 0.0);
  if (!(out.w_bar_total > 0.0))
    throw Error(ErrorCode::BadRanking, "modified weights do not sum to a positive value");
  for (std::size_t k = 0; k < total; ++k) {
    out.m.push_back(out.w_bar[k] / out.w_bar_total);
    out.mu.push_back(out.w[k] / out.w_bar_total);
  }
  out.capacity.singletons.assign(out.m.begin(), out.m.begin() + n);
  for (std::size_t k = static_cast<std::size_t>(n); k < total; ++k)
    out.capacity.pairs.push_back({out.projects[k].i, out.projects[k].j, out.m[k]});
  out.violations = validate_2additive(out.capacity);
  for (std::size_t k = 0; k < ranking.pairs.size(); ++k) {
    const auto& pr = ranking.pairs[k];
    double m = out.m[static_cast<std::size_t>(n) + k];
    bool bad = (pr.hint == InteractionSign::Positive && !(m > 0.0)) ||
               (pr.hint == InteractionSign::Negative && !(m < 0.0));
    if (bad) out.sign_mismatches.push_back({pr.i, pr.j, pr.hint, m});
  }
  return out;
}

std::vector<CapacityViolation> validate_2additive(const TwoAdditiveCapacity& cap, double tol) {
  std::vector<CapacityViolation> out;
  double total = std::accumulate(cap.singletons.begin(), cap.singletons.end(), 0.0);
  for (const auto& pt : cap.pairs) total += pt.m;
  if (std::fabs(total - 1.0) > tol)
    out.push_back({CapacityViolation::Kind::Normalization, -1, {}, total});
  for (int j = 0; j < cap.criteria(); ++j) {
    CapacityViolation v{CapacityViolation::Kind::Monotonicity, j, {},
                        cap.singletons[static_cast<std::size_t>(j)]};
    for (const auto& pt : cap.pairs) {
      if (pt.m >= 0.0 || (pt.i != j && pt.j != j)) continue;
      v.partners.push_back(pt.i == j ? pt.j : pt.i);
      v.value += pt.m;
    }
    if (v.value < -tol) out.push_back(v);
  }
  return out;
}

double mobius_to_capacity(const TwoAdditiveCapacity& cap, const std::vector<int>& subset) {
  return cap.mu(subset);
}

double choquet_capacity_form(const std::vector<double>& u, const TwoAdditiveCapacity& cap) {
  const auto n = u.size();
  if (n != cap.singletons.size())
    throw Error(ErrorCode::Validation, "utility vector size differs from criterion count");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
  std::uint64_t upper = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  double prev = 0.0, sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double v = u[order[k]];
    sum += (v - prev) * cap.mu(upper);
    prev = v;
    upper &= ~(std::uint64_t{1} << order[k]);
  }
  return sum;
}

double choquet_mobius_form(const std::vector<double>& u, const TwoAdditiveCapacity& cap) {
  if (u.size() != cap.singletons.size())
    throw Error(ErrorCode::Validation, "utility vector size differs from criterion count");
  double sum = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) sum += cap.singletons[j] * u[j];
  for (const auto& pt : cap.pairs)
    sum += pt.m * std::min(u[static_cast<std::size_t>(pt.i)], u[static_cast<std::size_t>(pt.j)]);
  return sum;
}

double choquet_value(const std::vector<double>& u, const TwoAdditiveCapacity& cap) {
  if (!validate_2additive(cap).empty())
    throw Error(ErrorCode::CapacityInvalid, "capacity violates normalization or monotonicity");
  double a = choquet_capacity_form(u, cap);
  double b = choquet_mobius_form(u, cap);
  if (std::fabs(a - b) > 1e-9)
    throw Error(ErrorCode::CapacityInvalid, "Choquet forms disagree beyond 1e-9");
  return a;
}

}  // namespace dcm
