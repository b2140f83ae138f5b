#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcm/project.hpp"

namespace dcm {

struct CriterionScale {
  std::string criterion;
  std::string source;  // "table", "precise_table" or "extraction"
  PairwiseTable precise;
  ValueScale scale;
};

// Precise table used for the main evaluation of one criterion.
PairwiseTable resolve_precise_table(const Criterion& c, const SolverOptions& opts = {});

CriterionScale build_criterion_scale(const Criterion& c, const SolverOptions& opts = {});
std::vector<CriterionScale> build_scales(const Project& p, const SolverOptions& opts = {});

double alternative_utility(const Criterion& c, const ValueScale& s, const Performance& perf);
// Alternatives x criteria.
std::vector<std::vector<double>> utility_matrix(const Project& p,
                                                const std::vector<CriterionScale>& scales);

CapacityElicitation elicit_capacity(const Project& p);

struct Evaluation {
  std::vector<std::string> alternatives;
  std::vector<std::vector<double>> utilities;
  std::vector<double> values;
  std::vector<std::size_t> ranking;  // alternative indices, best first
};

Evaluation evaluate_project(const Project& p, const SolverOptions& opts = {});

enum class SmaaMode { Enumerate, Sample };

struct SmaaRequest {
  SmaaMode mode = SmaaMode::Enumerate;
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 10000;     // hit-and-run tables per sampled criterion
  std::uint64_t limit = kDefaultComboLimit;
};

struct SmaaRun {
  SmaaResult result;
  std::vector<std::string> alternatives;
  std::vector<std::string> criterion_modes;
  std::vector<std::size_t> variant_counts;
};

// Utility columns for every compatible table of one criterion.
CriterionVariants criterion_variants(const Project& p, std::size_t criterion, SmaaMode mode,
                                     std::uint64_t samples, std::uint64_t seed,
                                     const SolverOptions& opts = {},
                                     std::string* mode_used = nullptr);

SmaaRun run_project_smaa(const Project& p, const SmaaRequest& req, const SolverOptions& opts = {});

json scales_to_json(const std::vector<CriterionScale>& scales);
json capacity_to_json(const Project& p, const CapacityElicitation& cap);
json evaluation_to_json(const Evaluation& ev);
json smaa_run_to_json(const SmaaRun& run, SmaaMode mode);

// Fill the derived cache entries that are missing.
void refresh_derived(Project& p, const SolverOptions& opts = {});

}  // namespace dcm
