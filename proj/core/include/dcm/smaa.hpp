#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dcm/choquet.hpp"

namespace dcm {

// One compatible evaluation of a single criterion: the utility of every
// alternative under one value scale.
using UtilityColumn = std::vector<double>;

struct CriterionVariants {
  std::vector<UtilityColumn> variants;
};

inline constexpr std::uint64_t kDefaultComboLimit = 1000000;

// Number of combinations, ComboExplosion when it exceeds `limit`.
std::uint64_t combination_count(const std::vector<CriterionVariants>& crit, std::uint64_t limit);

// Full Cartesian product of variant indices, last criterion varying fastest.
std::vector<std::vector<std::size_t>> enumerate_combinations(
    const std::vector<CriterionVariants>& crit, std::uint64_t limit = kDefaultComboLimit);

// Alternatives x criteria utility matrix for one combination.
std::vector<std::vector<double>> combination_matrix(const std::vector<CriterionVariants>& crit,
                                                    const std::vector<std::size_t>& pick);

struct SmaaResult {
  std::uint64_t combination_count = 0;
  std::vector<std::vector<std::uint64_t>> rank_counts;  // alternative x rank
  std::vector<std::vector<std::uint64_t>> win_counts;   // alternative x alternative
  std::optional<std::uint64_t> seed;
  bool sampled = false;

  std::vector<std::vector<double>> b() const;
  std::vector<std::vector<double>> p() const;
};

// Integer counters; merging accumulators is order independent.
class SmaaAccumulator {
 public:
  explicit SmaaAccumulator(std::size_t alternatives);
  void add(const std::vector<double>& values);
  void merge(const SmaaAccumulator& other);
  SmaaResult result() const;

 private:
  std::size_t m_;
  std::uint64_t total_ = 0;
  std::vector<std::vector<std::uint64_t>> ranks_;
  std::vector<std::vector<std::uint64_t>> wins_;
};

struct SmaaOptions {
  std::uint64_t limit = kDefaultComboLimit;
  // Beyond `limit` the product is sampled uniformly `samples` times when set.
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 100000;
};

using Combination = std::vector<std::size_t>;

std::vector<std::vector<double>> rank_acceptability(const std::vector<CriterionVariants>& crit,
                                                    const std::vector<Combination>& combos,
                                                    const TwoAdditiveCapacity& cap);
std::vector<std::vector<double>> pairwise_winning(const std::vector<CriterionVariants>& crit,
                                                  const std::vector<Combination>& combos,
                                                  const TwoAdditiveCapacity& cap);

SmaaResult run_smaa(const std::vector<CriterionVariants>& crit, const TwoAdditiveCapacity& cap,
                    const SmaaOptions& opts = {});

}  // namespace dcm
