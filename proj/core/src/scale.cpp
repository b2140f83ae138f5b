#include "dcm/scale.hpp"

#include <cmath>

namespace dcm {

double ValueScale::at(int level) const {
  if (level < 1 || level > levels())
    throw Error(ErrorCode::OutOfRange, "level " + std::to_string(level) + " outside the scale");
  return utilities[static_cast<std::size_t>(level - 1)];
}

namespace {

template <class Entry>
ValueScale ladder(int t, int p, int q, double u_p, double u_q, Entry entry) {
  if (p < 1 || q > t || p >= q)
    throw Error(ErrorCode::Validation, "anchors need 1 <= p < q <= t");
  if (!(u_p < u_q)) throw Error(ErrorCode::Validation, "anchor utilities need u_p < u_q");
  ValueScale s;
  s.low = {p, u_p};
  s.high = {q, u_q};
  s.alpha = (u_q - u_p) / (entry(p, q) + 1.0);
  s.utilities.resize(static_cast<std::size_t>(t));
  for (int k = 1; k <= t; ++k) {
    double u = u_p;
    if (k > p) u = u_p + (entry(p, k) + 1.0) * s.alpha;
    if (k < p) u = u_p - (entry(k, p) + 1.0) * s.alpha;
    s.utilities[static_cast<std::size_t>(k - 1)] = u;
  }
  s.utilities[static_cast<std::size_t>(q - 1)] = u_q;
  return s;
}

}  // namespace

ValueScale build_interval_scale(const PairwiseTable& tbl, int p, int q, double u_p, double u_q) {
  if (!tbl.all_exact())
    throw Error(ErrorCode::InconsistentTable, "scales need a precise table");
  if (!check_consistency(tbl).empty())
    throw Error(ErrorCode::InconsistentTable, "table violates the consistency condition");
  auto s = ladder(tbl.levels(), p, q, u_p, u_q,
                  [&](int a, int b) { return static_cast<double>(tbl.at(a, b).lo); });
  s.coordinates = tbl.coordinates;
  return s;
}

ValueScale build_interval_scale(const ContinuousTable& tbl, int p, int q, double u_p, double u_q) {
  if (consistency_residual(tbl) > 1e-9)
    throw Error(ErrorCode::InconsistentTable, "table violates the consistency condition");
  return ladder(tbl.levels(), p, q, u_p, u_q, [&](int a, int b) { return tbl.at(a, b); });
}

double interpolate(const ValueScale& scale, double x) {
  const auto& c = scale.coordinates;
  if (c.size() != scale.utilities.size() || c.size() < 2)
    throw Error(ErrorCode::Validation, "scale has no level coordinates");
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    double a = c[k], b = c[k + 1];
    if ((x - a) * (x - b) > 0.0) continue;
    if (x == a) return scale.utilities[k];
    if (x == b) return scale.utilities[k + 1];
    double ua = scale.utilities[k], ub = scale.utilities[k + 1];
    return ua + (x - a) / (b - a) * (ub - ua);
  }
  throw Error(ErrorCode::OutOfRange, "performance " + std::to_string(x) +
                                         " lies outside the level coordinates");
}

RatioWeights build_ratio_weights(std::size_t class_count, const std::vector<Cards>& cards,
                                 double base, double ratio) {
  if (class_count == 0) throw Error(ErrorCode::BadRanking, "ranking has no classes");
  if (cards.size() + 1 != class_count)
    throw Error(ErrorCode::BadRanking, "expected one card count between consecutive classes");
  for (Cards e : cards)
    if (e < 0) throw Error(ErrorCode::BadRanking, "card counts must be nonnegative");
  if (!(ratio >= 1.0) || !std::isfinite(ratio))
    throw Error(ErrorCode::BadRatio, "ratio z must be at least 1");
  if (!(base > 0.0) || !std::isfinite(base))
    throw Error(ErrorCode::BadRatio, "base weight must be positive");
  RatioWeights w;
  w.cards = cards;
  w.base = base;
  w.ratio = ratio;
  Cards s = 0;
  for (Cards e : cards) s += e + 1;
  w.unit = s > 0 ? base * (ratio - 1.0) / static_cast<double>(s) : 0.0;
  w.weights.push_back(base);
  Cards run = 0;
  for (Cards e : cards) {
    run += e + 1;
    w.weights.push_back(base + w.unit * static_cast<double>(run));
  }
  if (s > 0) w.weights.back() = base * ratio;
  return w;
}

}  // namespace dcm
