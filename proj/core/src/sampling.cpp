#include "dcm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dcm {

namespace {
constexpr Cards kInf = std::numeric_limits<Cards>::max() / 4;
}

GapPolytope::GapPolytope(const PairwiseTable& tbl) : t_(tbl.levels()) {
  const auto t = static_cast<std::size_t>(t_);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < tbl.cell_count(); ++i) {
    const Cell& c = tbl.at(i);
    Pair pr = tbl.pair_at(i);
    if (c.is_missing())
      throw Error(ErrorCode::Validation, "sampling needs every cell bounded", to_string(pr));
    cells_.push_back(c);
    edges.push_back({pr.p, pr.q, static_cast<double>(c.hi + 1)});
    edges.push_back({pr.q, pr.p, -static_cast<double>(c.lo + 1)});
  }
  for (int r = 1; r < t_; ++r) edges.push_back({r + 1, r, -1.0});

  dist_.assign((t + 1) * (t + 1), kInf);
  auto D = [&](int i, int j) -> Cards& {
    return dist_[static_cast<std::size_t>(i) * (t + 1) + static_cast<std::size_t>(j)];
  };
  for (int k = 1; k <= t_; ++k) D(k, k) = 0;
  for (const Edge& e : edges) D(e.from, e.to) = std::min(D(e.from, e.to), static_cast<Cards>(e.w));
  for (int k = 1; k <= t_; ++k)
    for (int i = 1; i <= t_; ++i) {
      if (D(i, k) >= kInf) continue;
      for (int j = 1; j <= t_; ++j)
        if (D(k, j) < kInf) D(i, j) = std::min(D(i, j), D(i, k) + D(k, j));
    }
  for (int k = 1; k <= t_; ++k)
    if (D(k, k) < 0)
      throw Error(ErrorCode::EmptyPolytope, "no real-valued consistent table fits the bounds");

  cls_.assign(t + 1, 0);
  offset_.assign(t + 1, 0.0);
  for (int k = 1; k <= t_; ++k) {
    for (int i = 1; i <= k; ++i)
      if (D(i, k) + D(k, i) == 0) {
        cls_[static_cast<std::size_t>(k)] = i;
        offset_[static_cast<std::size_t>(k)] = static_cast<double>(D(i, k));
        break;
      }
    if (cls_[static_cast<std::size_t>(k)] == k && k != 1) free_.push_back(k);
  }
  for (const Edge& e : edges) {
    int a = cls_[static_cast<std::size_t>(e.from)];
    int b = cls_[static_cast<std::size_t>(e.to)];
    if (a == b) continue;
    cross_.push_back({a, b,
                      e.w - offset_[static_cast<std::size_t>(e.to)] +
                          offset_[static_cast<std::size_t>(e.from)]});
  }
}

double GapPolytope::bound(int i, int j) const {
  const auto t = static_cast<std::size_t>(t_);
  return static_cast<double>(dist_[static_cast<std::size_t>(i) * (t + 1) + static_cast<std::size_t>(j)]);
}

bool GapPolytope::contains(const ContinuousTable& tbl, double tol) const {
  if (tbl.levels() != t_) return false;
  std::size_t i = 0;
  for (int p = 1; p < t_; ++p)
    for (int q = p + 1; q <= t_; ++q, ++i) {
      double e = tbl.at(p, q);
      if (e < static_cast<double>(cells_[i].lo) - tol || e > static_cast<double>(cells_[i].hi) + tol)
        return false;
    }
  return consistency_residual(tbl) <= tol;
}

HitAndRun::HitAndRun(const GapPolytope& poly, std::uint64_t seed, SamplerOptions opts)
    : poly_(poly), opts_(opts), rng_(seed) {
  const int t = poly.t_;
  const auto n = static_cast<std::size_t>(t) + 1;
  // Shortest-path potentials from every source are vertices; their mean lies
  // in the relative interior.
  std::vector<double> x(n, 0.0);
  for (int s = 1; s <= t; ++s)
    for (int k = 1; k <= t; ++k)
      x[static_cast<std::size_t>(k)] += (poly.bound(s, k) - poly.bound(s, 1)) / t;
  y_.assign(n, 0.0);
  for (int r : poly.free_) y_[static_cast<std::size_t>(r)] = x[static_cast<std::size_t>(r)];
  dir_.assign(n, 0.0);
  for (std::size_t i = 0; i < opts_.burn_in; ++i) step();
}

void HitAndRun::step() {
  if (poly_.free_.empty()) return;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int r : poly_.free_) dir_[static_cast<std::size_t>(r)] = gauss(rng_);
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& e : poly_.cross_) {
    auto a = static_cast<std::size_t>(e.from);
    auto b = static_cast<std::size_t>(e.to);
    double slope = dir_[b] - dir_[a];
    double slack = std::max(0.0, e.w - (y_[b] - y_[a]));
    if (slope > 1e-15)
      hi = std::min(hi, slack / slope);
    else if (slope < -1e-15)
      lo = std::max(lo, slack / slope);
  }
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) return;
  double s = std::uniform_real_distribution<double>(lo, hi)(rng_);
  for (int r : poly_.free_) y_[static_cast<std::size_t>(r)] += s * dir_[static_cast<std::size_t>(r)];
}

ContinuousTable HitAndRun::current() const {
  const int t = poly_.t_;
  std::vector<double> x(static_cast<std::size_t>(t) + 1, 0.0);
  for (int k = 1; k <= t; ++k) {
    auto ki = static_cast<std::size_t>(k);
    x[ki] = y_[static_cast<std::size_t>(poly_.cls_[ki])] + poly_.offset_[ki];
  }
  ContinuousTable out(t);
  std::size_t i = 0;
  for (int p = 1; p < t; ++p)
    for (int q = p + 1; q <= t; ++q, ++i) {
      const Cell& c = poly_.cells_[i];
      double e = x[static_cast<std::size_t>(q)] - x[static_cast<std::size_t>(p)] - 1.0;
      out.set(p, q, std::clamp(e, static_cast<double>(c.lo), static_cast<double>(c.hi)));
    }
  return out;
}

ContinuousTable HitAndRun::next() {
  for (std::size_t i = 0; i < std::max<std::size_t>(opts_.thinning, 1); ++i) step();
  return current();
}

std::vector<ContinuousTable> sample_continuous_tables(const PairwiseTable& tbl, std::size_t n,
                                                      std::uint64_t seed,
                                                      const SamplerOptions& opts) {
  GapPolytope poly(tbl);
  HitAndRun walk(poly, seed, opts);
  std::vector<ContinuousTable> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(walk.next());
  return out;
}

}  // namespace dcm
