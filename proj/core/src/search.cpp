#include "search.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace dcm::detail {

Problem make_problem(const PairwiseTable& tbl, Cards card_limit) {
  Problem pb;
  pb.t = tbl.levels();
  pb.free_limit = card_limit;
  pb.cells.resize(tbl.cell_count());
  for (std::size_t i = 0; i < tbl.cell_count(); ++i) {
    const Cell& c = tbl.at(i);
    if (c.is_missing()) continue;
    if (c.hi > card_limit)
      throw Error(ErrorCode::DomainExceeded,
                  "card count " + std::to_string(c.hi) + " exceeds the limit " +
                      std::to_string(card_limit),
                  to_string(tbl.pair_at(i)));
    pb.cells[i] = {true, c.lo, c.hi};
  }
  return pb;
}

namespace {

std::size_t cell_index(int t, int p, int q) {
  auto pp = static_cast<std::size_t>(p - 1);
  return pp * t - pp * (pp + 1) / 2 + static_cast<std::size_t>(q - p - 1);
}

// Depth-first search over d with the cost of a cell defined as 0 inside its
// bounds and 1 outside. Potentials x_k = sum_{r<k}(d_r + 1), e_pq = x_q - x_p - 1.
class Walker {
 public:
  Walker(const Problem& pb, bool tight) : pb_(pb), t_(pb.t) {
    const auto gaps = static_cast<std::size_t>(t_ - 1);
    upper_.assign(gaps, 0);
    for (int r = 1; r < t_; ++r) {
      Cards loose = -1;
      Cards tight_ub = std::numeric_limits<Cards>::max();
      for (int p = 1; p <= r; ++p)
        for (int q = r + 1; q <= t_; ++q) {
          const Bound& b = pb.cells[cell_index(t_, p, q)];
          if (!b.given) continue;
          loose = std::max(loose, b.hi);
          tight_ub = std::min(tight_ub, b.hi - (q - p - 1));
        }
      auto ri = static_cast<std::size_t>(r - 1);
      if (loose < 0) {
        // Only unknown cells span this gap; its value never changes a cost.
        upper_[ri] = tight ? pb.free_limit : 0;
        unbounded_ = unbounded_ || tight;
      } else {
        upper_[ri] = tight ? tight_ub : loose + 1;
      }
    }
    reach_.assign(static_cast<std::size_t>(t_) + 1, 0);
    // reach_[k] is the largest x_k reachable inside the domain.
    for (int k = 2; k <= t_; ++k)
      reach_[static_cast<std::size_t>(k)] =
          reach_[static_cast<std::size_t>(k - 1)] + upper_[static_cast<std::size_t>(k - 2)] + 1;
    x_.assign(static_cast<std::size_t>(t_) + 1, 0);
    d_.assign(gaps, 0);
    flag_.assign(pb.cells.size(), 0);
  }

  bool unbounded() const { return unbounded_; }
  Cards free_bound() const { return pb_.free_limit; }

  std::optional<Candidate> minimize() {
    std::size_t given = 0;
    for (const auto& b : pb_.cells) given += b.given ? 1 : 0;
    for (std::size_t z = 0; z <= given; ++z) {
      budget_ = z;
      best_.reset();
      dive(1, 0, 0, 0);
      if (best_) return best_;
    }
    return std::nullopt;
  }

  FeasibleScan scan(const std::function<bool(const GapVector&)>& visit) {
    visit_ = &visit;
    budget_ = 0;
    stop_ = false;
    for (Cards u : upper_)
      if (u < 0) return {unbounded_, false, pb_.free_limit};
    dive(1, 0, 0, 0);
    return {unbounded_, stop_, pb_.free_limit};
  }

 private:
  // Cells whose bounds can no longer be met given x_1..x_q.
  std::size_t doomed(int q) const {
    std::size_t n = 0;
    for (int p = 1; p <= q; ++p)
      for (int qq = q + 1; qq <= t_; ++qq) {
        const Bound& b = pb_.cells[cell_index(t_, p, qq)];
        if (!b.given) continue;
        Cards base = x_[static_cast<std::size_t>(q)] - x_[static_cast<std::size_t>(p)];
        Cards emin = base + (qq - q) - 1;
        Cards emax = base + reach_[static_cast<std::size_t>(qq)] - reach_[static_cast<std::size_t>(q)] - 1;
        if (emin > b.hi || emax < b.lo) ++n;
      }
    return n;
  }

  bool hits_cut() const {
    for (const auto& f : pb_.forbidden) {
      bool all = !f.empty();
      for (std::size_t i : f)
        if (!flag_[i]) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  }

  void dive(int r, std::size_t count, Cards dev, Cards sdev) {
    if (stop_) return;
    if (r == t_) {
      leaf(dev, sdev);
      return;
    }
    const auto ri = static_cast<std::size_t>(r - 1);
    const int q = r + 1;
    for (Cards v = 0; v <= upper_[ri]; ++v) {
      d_[ri] = v;
      x_[static_cast<std::size_t>(q)] = x_[static_cast<std::size_t>(r)] + v + 1;
      std::size_t c = count;
      Cards dv = dev, sd = sdev;
      std::size_t touched_from = touched_.size();
      for (int p = 1; p < q; ++p) {
        std::size_t idx = cell_index(t_, p, q);
        const Bound& b = pb_.cells[idx];
        if (!b.given) continue;
        Cards e = x_[static_cast<std::size_t>(q)] - x_[static_cast<std::size_t>(p)] - 1;
        if (e < b.lo) {
          ++c;
          dv += b.lo - e;
          sd -= b.lo - e;
        } else if (e > b.hi) {
          ++c;
          dv += e - b.hi;
          sd += e - b.hi;
        } else {
          continue;
        }
        flag_[idx] = 1;
        touched_.push_back(idx);
      }
      bool prune = c > budget_ || (best_ && dv > best_->deviation);
      if (!prune) prune = c + doomed(q) > budget_;
      if (!prune && touched_.size() > touched_from && !pb_.forbidden.empty()) prune = hits_cut();
      if (!prune) dive(r + 1, c, dv, sd);
      while (touched_.size() > touched_from) {
        flag_[touched_.back()] = 0;
        touched_.pop_back();
      }
      if (stop_) return;
    }
  }

  void leaf(Cards dev, Cards sdev) {
    if (visit_) {
      if (!(*visit_)(d_)) stop_ = true;
      return;
    }
    std::vector<std::size_t> mod(touched_.begin(), touched_.end());
    std::sort(mod.begin(), mod.end());
    if (best_) {
      auto lhs = std::tie(dev, sdev, mod);
      auto rhs = std::tie(best_->deviation, best_->signed_deviation, best_->modified);
      // Later leaves carry lexicographically larger d, so ties keep the first.
      if (!(lhs < rhs)) return;
    }
    best_ = Candidate{d_, std::move(mod), dev, sdev};
  }

  const Problem& pb_;
  int t_;
  std::vector<Cards> upper_;
  std::vector<Cards> reach_;
  std::vector<Cards> x_;
  GapVector d_;
  std::vector<char> flag_;
  std::vector<std::size_t> touched_;
  std::size_t budget_ = 0;
  std::optional<Candidate> best_;
  const std::function<bool(const GapVector&)>* visit_ = nullptr;
  bool stop_ = false;
  bool unbounded_ = false;
};

}  // namespace

std::optional<Candidate> minimize(const Problem& pb) {
  Walker w(pb, false);
  return w.minimize();
}

FeasibleScan scan_feasible(const Problem& pb, const std::function<bool(const GapVector&)>& visit) {
  Walker w(pb, true);
  return w.scan(visit);
}

}  // namespace dcm::detail
