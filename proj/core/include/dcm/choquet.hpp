#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcm/pct.hpp"
#include "dcm/scale.hpp"

namespace dcm {

enum class InteractionSign { Unspecified, Positive, Negative };

// Unordered criterion pair (0-based indices, i < j after normalization).
struct InteractionPair {
  int i = 0;
  int j = 0;
  InteractionSign hint = InteractionSign::Unspecified;
};

// A dummy project: singleton {i} when j < 0, otherwise the pair {i, j}.
struct DummyProject {
  int i = 0;
  int j = -1;
  bool is_pair() const { return j >= 0; }
  bool operator==(const DummyProject&) const = default;
};

struct DummyProjectRanking {
  int criteria = 0;
  std::vector<InteractionPair> pairs;
  std::vector<std::vector<DummyProject>> classes;  // worst to best
  std::vector<Cards> cards;                        // between consecutive classes
  double ratio = 1.0;                              // z
  double base = 1.0;                               // w(r_1)
};

// Reads the cards between consecutive classes from a consistent table over
// the classes.
std::vector<Cards> cards_from_table(const PairwiseTable& tbl);

struct TwoAdditiveCapacity {
  struct PairTerm {
    int i = 0;
    int j = 0;
    double m = 0.0;
  };
  std::vector<double> singletons;  // m({g_j})
  std::vector<PairTerm> pairs;     // m({g_i,g_j}) for pairs in O

  int criteria() const { return static_cast<int>(singletons.size()); }
  // mu(T) for the subset encoded as a bit mask.
  double mu(std::uint64_t subset) const;
  double mu(const std::vector<int>& subset) const;
};

struct CapacityViolation {
  enum class Kind { Normalization, Monotonicity };
  Kind kind = Kind::Normalization;
  int criterion = -1;
  std::vector<int> partners;
  double value = 0.0;  // offending sum
};

struct SignMismatch {
  int i = 0;
  int j = 0;
  InteractionSign hint = InteractionSign::Unspecified;
  double m = 0.0;
};

struct CapacityElicitation {
  RatioWeights ranking;
  std::vector<DummyProject> projects;  // singletons 0..n-1, then pairs in O order
  std::vector<double> w;
  std::vector<double> w_bar;
  std::vector<double> m;
  std::vector<double> mu;
  double w_bar_total = 0.0;
  TwoAdditiveCapacity capacity;
  std::vector<CapacityViolation> violations;
  std::vector<SignMismatch> sign_mismatches;
  bool valid() const { return violations.empty(); }
};

CapacityElicitation capacity_from_dcm(const DummyProjectRanking& ranking);

std::vector<CapacityViolation> validate_2additive(const TwoAdditiveCapacity& cap,
                                                  double tol = 1e-9);

double mobius_to_capacity(const TwoAdditiveCapacity& cap, const std::vector<int>& subset);

// Sorted-differences form with the level sets N_j.
double choquet_capacity_form(const std::vector<double>& u, const TwoAdditiveCapacity& cap);
// Linear Mobius form for 2-additive capacities.
double choquet_mobius_form(const std::vector<double>& u, const TwoAdditiveCapacity& cap);
// Validates the capacity, evaluates both forms and checks they agree to 1e-9.
double choquet_value(const std::vector<double>& u, const TwoAdditiveCapacity& cap);

}  // namespace dcm
