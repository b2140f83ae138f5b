#include "dcm/smaa.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace dcm {

namespace {

std::size_t alternative_count(const std::vector<CriterionVariants>& crit) {
  if (crit.empty()) throw Error(ErrorCode::Validation, "no criteria to combine");
  std::size_t m = 0;
  bool first = true;
  for (const auto& c : crit) {
    if (c.variants.empty()) throw Error(ErrorCode::Validation, "criterion without variants");
    for (const auto& col : c.variants) {
      if (first) m = col.size();
      first = false;
      if (col.size() != m)
        throw Error(ErrorCode::Validation, "variants disagree on the number of alternatives");
    }
  }
  return m;
}

std::vector<double> evaluate(const std::vector<CriterionVariants>& crit, const Combination& pick,
                             const TwoAdditiveCapacity& cap) {
  auto mat = combination_matrix(crit, pick);
  std::vector<double> out;
  out.reserve(mat.size());
  for (const auto& row : mat) out.push_back(choquet_value(row, cap));
  return out;
}

// Visits combinations start..end (mixed-radix order) accumulating counts.
void accumulate_range(const std::vector<CriterionVariants>& crit, const TwoAdditiveCapacity& cap,
                      std::uint64_t start, std::uint64_t end, SmaaAccumulator& acc) {
  Combination pick(crit.size(), 0);
  std::uint64_t rest = start;
  for (std::size_t k = crit.size(); k-- > 0;) {
    pick[k] = static_cast<std::size_t>(rest % crit[k].variants.size());
    rest /= crit[k].variants.size();
  }
  for (std::uint64_t i = start; i < end; ++i) {
    acc.add(evaluate(crit, pick, cap));
    for (std::size_t k = crit.size(); k-- > 0;) {
      if (++pick[k] < crit[k].variants.size()) break;
      pick[k] = 0;
    }
  }
}

}  // namespace

std::uint64_t combination_count(const std::vector<CriterionVariants>& crit, std::uint64_t limit) {
  std::uint64_t n = 1;
  for (const auto& c : crit) {
    if (c.variants.empty()) throw Error(ErrorCode::Validation, "criterion without variants");
    if (n > limit / c.variants.size())
      throw Error(ErrorCode::ComboExplosion,
                  "combination count exceeds the limit of " + std::to_string(limit));
    n *= c.variants.size();
  }
  return n;
}

std::vector<std::vector<std::size_t>> enumerate_combinations(
    const std::vector<CriterionVariants>& crit, std::uint64_t limit) {
  std::uint64_t n = combination_count(crit, limit);
  std::vector<Combination> out;
  out.reserve(static_cast<std::size_t>(n));
  Combination pick(crit.size(), 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    out.push_back(pick);
    for (std::size_t k = crit.size(); k-- > 0;) {
      if (++pick[k] < crit[k].variants.size()) break;
      pick[k] = 0;
    }
  }
  return out;
}

std::vector<std::vector<double>> combination_matrix(const std::vector<CriterionVariants>& crit,
                                                    const Combination& pick) {
  const std::size_t m = alternative_count(crit);
  std::vector<std::vector<double>> mat(m, std::vector<double>(crit.size()));
  for (std::size_t j = 0; j < crit.size(); ++j) {
    const auto& col = crit[j].variants.at(pick.at(j));
    for (std::size_t a = 0; a < m; ++a) mat[a][j] = col[a];
  }
  return mat;
}

SmaaAccumulator::SmaaAccumulator(std::size_t alternatives)
    : m_(alternatives),
      ranks_(alternatives, std::vector<std::uint64_t>(alternatives, 0)),
      wins_(alternatives, std::vector<std::uint64_t>(alternatives, 0)) {}

void SmaaAccumulator::add(const std::vector<double>& values) {
  if (values.size() != m_) throw Error(ErrorCode::Validation, "value count mismatch");
  for (std::size_t a = 0; a < m_; ++a) {
    std::size_t better = 0;
    for (std::size_t o = 0; o < m_; ++o) {
      if (values[o] > values[a]) ++better;
      if (values[a] > values[o]) ++wins_[a][o];
    }
    ++ranks_[a][better];
  }
  ++total_;
}

void SmaaAccumulator::merge(const SmaaAccumulator& other) {
  if (other.m_ != m_) throw Error(ErrorCode::Validation, "accumulator size mismatch");
  total_ += other.total_;
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t k = 0; k < m_; ++k) {
      ranks_[a][k] += other.ranks_[a][k];
      wins_[a][k] += other.wins_[a][k];
    }
}

SmaaResult SmaaAccumulator::result() const {
  SmaaResult r;
  r.combination_count = total_;
  r.rank_counts = ranks_;
  r.win_counts = wins_;
  return r;
}

namespace {
std::vector<std::vector<double>> percent(const std::vector<std::vector<std::uint64_t>>& counts,
                                         std::uint64_t total) {
  std::vector<std::vector<double>> out;
  for (const auto& row : counts) {
    std::vector<double> r;
    for (auto c : row)
      r.push_back(total ? 100.0 * static_cast<double>(c) / static_cast<double>(total) : 0.0);
    out.push_back(std::move(r));
  }
  return out;
}
}  // namespace

std::vector<std::vector<double>> SmaaResult::b() const { return percent(rank_counts, combination_count); }
std::vector<std::vector<double>> SmaaResult::p() const { return percent(win_counts, combination_count); }

std::vector<std::vector<double>> rank_acceptability(const std::vector<CriterionVariants>& crit,
                                                    const std::vector<Combination>& combos,
                                                    const TwoAdditiveCapacity& cap) {
  SmaaAccumulator acc(alternative_count(crit));
  for (const auto& c : combos) acc.add(evaluate(crit, c, cap));
  return acc.result().b();
}

std::vector<std::vector<double>> pairwise_winning(const std::vector<CriterionVariants>& crit,
                                                  const std::vector<Combination>& combos,
                                                  const TwoAdditiveCapacity& cap) {
  SmaaAccumulator acc(alternative_count(crit));
  for (const auto& c : combos) acc.add(evaluate(crit, c, cap));
  return acc.result().p();
}

SmaaResult run_smaa(const std::vector<CriterionVariants>& crit, const TwoAdditiveCapacity& cap,
                    const SmaaOptions& opts) {
  const std::size_t m = alternative_count(crit);
  if (!validate_2additive(cap).empty())
    throw Error(ErrorCode::CapacityInvalid, "capacity violates normalization or monotonicity");
  std::uint64_t n = 0;
  try {
    n = combination_count(crit, opts.limit);
  } catch (const Error&) {
    if (!opts.seed) throw;
    std::mt19937_64 rng(*opts.seed);
    SmaaAccumulator acc(m);
    Combination pick(crit.size());
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      for (std::size_t k = 0; k < crit.size(); ++k)
        pick[k] = std::uniform_int_distribution<std::size_t>(0, crit[k].variants.size() - 1)(rng);
      acc.add(evaluate(crit, pick, cap));
    }
    auto r = acc.result();
    r.seed = opts.seed;
    r.sampled = true;
    return r;
  }
  // Contiguous slices per thread, merged in slice order.
  unsigned workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  if (n < 4096) workers = 1;
  std::vector<SmaaAccumulator> parts(workers, SmaaAccumulator(m));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t a = n * w / workers, b = n * (w + 1) / workers;
    pool.emplace_back([&, w, a, b] {
      try {
        accumulate_range(crit, cap, a, b, parts[w]);
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  SmaaAccumulator acc(m);
  for (const auto& part : parts) acc.merge(part);
  auto r = acc.result();
  r.seed = opts.seed;
  return r;
}

}  // namespace dcm
