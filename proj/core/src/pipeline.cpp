#include "dcm/pipeline.hpp"

#include <algorithm>
#include <numeric>

namespace dcm {

namespace {

std::string crit_loc(const Criterion& c) { return "criterion " + c.id; }

PairwiseTable keep_levels(PairwiseTable t, const PairwiseTable& src) {
  t.labels = src.labels;
  t.coordinates = src.coordinates;
  return t;
}

ValueScale scale_for(const Criterion& c, const PairwiseTable& precise) {
  Anchor lo = c.low_anchor(), hi = c.high_anchor();
  return build_interval_scale(precise, lo.level, hi.level, lo.utility, hi.utility);
}

}  // namespace

PairwiseTable resolve_precise_table(const Criterion& c, const SolverOptions& opts) {
  if (c.precise_table) return keep_levels(*c.precise_table, c.table);
  if (c.table.all_exact()) {
    if (!check_consistency(c.table).empty())
      throw Error(ErrorCode::InconsistentTable, "table violates the consistency condition; repair it first",
                  crit_loc(c));
    return c.table;
  }
  auto rep = mixed_repair(c.table, opts);
  if (rep.z() > 0)
    throw Error(ErrorCode::Infeasible,
                "no consistent precise table fits the judgments; repair them first", crit_loc(c));
  return keep_levels(rep.witness, c.table);
}

CriterionScale build_criterion_scale(const Criterion& c, const SolverOptions& opts) {
  CriterionScale cs;
  cs.criterion = c.id;
  cs.source = c.precise_table ? "precise_table" : c.table.all_exact() ? "table" : "extraction";
  cs.precise = resolve_precise_table(c, opts);
  cs.scale = scale_for(c, cs.precise);
  return cs;
}

std::vector<CriterionScale> build_scales(const Project& p, const SolverOptions& opts) {
  std::vector<CriterionScale> out;
  for (const auto& c : p.criteria) out.push_back(build_criterion_scale(c, opts));
  return out;
}

double alternative_utility(const Criterion& c, const ValueScale& s, const Performance& perf) {
  switch (perf.kind) {
    case Performance::Kind::Value:
      try {
        return interpolate(s, perf.value);
      } catch (const Error& e) {
        throw Error(e.code(), e.what(), crit_loc(c));
      }
    case Performance::Kind::Level:
      return s.at(static_cast<int>(perf.value));
    case Performance::Kind::Utility:
      return perf.value;
  }
  return 0.0;
}

std::vector<std::vector<double>> utility_matrix(const Project& p,
                                                const std::vector<CriterionScale>& scales) {
  std::vector<std::vector<double>> out;
  for (const auto& a : p.alternatives) {
    std::vector<double> row;
    for (std::size_t j = 0; j < p.criteria.size(); ++j)
      row.push_back(alternative_utility(p.criteria[j], scales[j].scale, a.performances.at(j)));
    out.push_back(row);
  }
  return out;
}

CapacityElicitation elicit_capacity(const Project& p) { return capacity_from_dcm(p.ranking()); }

Evaluation evaluate_project(const Project& p, const SolverOptions& opts) {
  auto cap = elicit_capacity(p);
  if (!cap.valid())
    throw Error(ErrorCode::MonotonicityViolated,
                "elicited capacity violates the 2-additive conditions; revise the ranking",
                "/capacity");
  auto scales = build_scales(p, opts);
  Evaluation ev;
  for (const auto& a : p.alternatives) ev.alternatives.push_back(a.id);
  ev.utilities = utility_matrix(p, scales);
  for (const auto& row : ev.utilities) ev.values.push_back(choquet_value(row, cap.capacity));
  ev.ranking.resize(ev.values.size());
  std::iota(ev.ranking.begin(), ev.ranking.end(), 0);
  std::stable_sort(ev.ranking.begin(), ev.ranking.end(),
                   [&](std::size_t a, std::size_t b) { return ev.values[a] > ev.values[b]; });
  return ev;
}

CriterionVariants criterion_variants(const Project& p, std::size_t j, SmaaMode mode,
                                     std::uint64_t samples, std::uint64_t seed,
                                     const SolverOptions& opts, std::string* mode_used) {
  const Criterion& c = p.criteria.at(j);
  VariantMode vm = c.variants;
  if (vm == VariantMode::Auto) {
    if (c.table.all_exact())
      vm = VariantMode::Fixed;
    else if (c.table.has_missing() || mode == SmaaMode::Enumerate)
      vm = VariantMode::Enumerate;
    else
      vm = VariantMode::Sample;
  }
  if (vm == VariantMode::Sample && mode == SmaaMode::Enumerate) vm = VariantMode::Enumerate;

  std::vector<ValueScale> scales;
  if (vm == VariantMode::Fixed) {
    if (mode_used) *mode_used = "fixed";
    scales.push_back(scale_for(c, resolve_precise_table(c, opts)));
  } else if (vm == VariantMode::Enumerate) {
    if (mode_used) *mode_used = "enumerate";
    auto en = enumerate_precise_extractions(c.table, opts);
    if (en.unbounded)
      throw Error(ErrorCode::DomainExceeded,
                  "a gap is constrained by no judgment, so compatible tables are unbounded",
                  crit_loc(c));
    if (!en.exhaustive)
      throw Error(ErrorCode::ComboExplosion, "too many compatible tables to enumerate", crit_loc(c));
    for (const auto& t : en.tables) scales.push_back(scale_for(c, keep_levels(t, c.table)));
  } else {
    if (mode_used) *mode_used = "sample";
    Anchor lo = c.low_anchor(), hi = c.high_anchor();
    for (const auto& t : sample_continuous_tables(c.table, static_cast<std::size_t>(samples), seed)) {
      auto s = build_interval_scale(t, lo.level, hi.level, lo.utility, hi.utility);
      s.coordinates = c.table.coordinates;
      scales.push_back(std::move(s));
    }
  }

  CriterionVariants out;
  out.variants.reserve(scales.size());
  for (const auto& s : scales) {
    UtilityColumn col;
    for (const auto& a : p.alternatives) col.push_back(alternative_utility(c, s, a.performances.at(j)));
    out.variants.push_back(std::move(col));
  }
  return out;
}

SmaaRun run_project_smaa(const Project& p, const SmaaRequest& req, const SolverOptions& opts) {
  if (req.mode == SmaaMode::Sample && !req.seed)
    throw Error(ErrorCode::Validation, "sampling needs an explicit seed", "seed");
  if (p.alternatives.empty()) throw Error(ErrorCode::Validation, "project has no alternatives");
  auto cap = elicit_capacity(p);
  if (!cap.valid())
    throw Error(ErrorCode::MonotonicityViolated,
                "elicited capacity violates the 2-additive conditions; revise the ranking",
                "/capacity");
  SmaaRun run;
  for (const auto& a : p.alternatives) run.alternatives.push_back(a.id);
  std::vector<CriterionVariants> crit;
  for (std::size_t j = 0; j < p.criteria.size(); ++j) {
    std::string used;
    // Distinct, reproducible stream per criterion.
    std::uint64_t s = req.seed.value_or(0) + 0x9E3779B97F4A7C15ULL * (j + 1);
    crit.push_back(criterion_variants(p, j, req.mode, req.samples, s, opts, &used));
    run.criterion_modes.push_back(used);
    run.variant_counts.push_back(crit.back().variants.size());
  }
  SmaaOptions so;
  so.limit = req.limit;
  so.seed = req.mode == SmaaMode::Sample ? req.seed : std::nullopt;
  so.samples = req.samples;
  run.result = run_smaa(crit, cap.capacity, so);
  return run;
}

json scales_to_json(const std::vector<CriterionScale>& scales) {
  json arr = json::array();
  for (const auto& cs : scales) {
    json j = {{"criterion", cs.criterion}, {"source", cs.source}};
    json sj = scale_to_json(cs.scale);
    for (auto& [k, v] : sj.items()) j[k] = v;
    PairwiseTable bare = cs.precise;
    bare.labels.clear();
    bare.coordinates.clear();
    j["table"] = table_to_json(bare, false);
    arr.push_back(j);
  }
  return arr;
}

json capacity_to_json(const Project& p, const CapacityElicitation& cap) {
  const std::size_t n = p.criteria.size();
  json singles = json::array(), pairs = json::array();
  for (std::size_t k = 0; k < cap.projects.size(); ++k) {
    const auto& dp = cap.projects[k];
    json e;
    if (!dp.is_pair()) {
      e["criterion"] = p.criteria[static_cast<std::size_t>(dp.i)].id;
    } else {
      e["i"] = p.criteria[static_cast<std::size_t>(dp.i)].id;
      e["j"] = p.criteria[static_cast<std::size_t>(dp.j)].id;
    }
    e["w"] = cap.w[k];
    e["w_bar"] = cap.w_bar[k];
    e["m"] = cap.m[k];
    e["mu"] = cap.mu[k];
    (k < n ? singles : pairs).push_back(e);
  }
  json viol = json::array();
  for (const auto& v : cap.violations) {
    json e = {{"condition", v.kind == CapacityViolation::Kind::Normalization ? "normalization"
                                                                              : "monotonicity"},
              {"value", v.value}};
    if (v.criterion >= 0) {
      e["criterion"] = p.criteria[static_cast<std::size_t>(v.criterion)].id;
      json partners = json::array();
      for (int o : v.partners) partners.push_back(p.criteria[static_cast<std::size_t>(o)].id);
      e["partners"] = partners;
    }
    viol.push_back(e);
  }
  json mism = json::array();
  for (const auto& s : cap.sign_mismatches)
    mism.push_back({{"i", p.criteria[static_cast<std::size_t>(s.i)].id},
                    {"j", p.criteria[static_cast<std::size_t>(s.j)].id},
                    {"hint", s.hint == InteractionSign::Positive ? "positive" : "negative"},
                    {"m", s.m}});
  return {{"z", cap.ranking.ratio},
          {"ell", cap.ranking.base},
          {"alpha", cap.ranking.unit},
          {"class_weights", cap.ranking.weights},
          {"w_bar_total", cap.w_bar_total},
          {"singletons", singles},
          {"pairs", pairs},
          {"valid", cap.valid()},
          {"violations", viol},
          {"sign_mismatches", mism}};
}

json evaluation_to_json(const Evaluation& ev) {
  json alts = json::array();
  std::vector<std::size_t> rank(ev.values.size());
  for (std::size_t r = 0; r < ev.ranking.size(); ++r) rank[ev.ranking[r]] = r + 1;
  for (std::size_t a = 0; a < ev.values.size(); ++a)
    alts.push_back({{"id", ev.alternatives[a]},
                    {"utilities", ev.utilities[a]},
                    {"value", ev.values[a]},
                    {"rank", rank[a]}});
  json order = json::array();
  for (auto a : ev.ranking) order.push_back(ev.alternatives[a]);
  return {{"alternatives", alts}, {"ranking", order}};
}

json smaa_run_to_json(const SmaaRun& run, SmaaMode mode) {
  json out = smaa_to_json(run.result, run.alternatives);
  out["mode"] = mode == SmaaMode::Enumerate ? "enumerate" : "sample";
  json crit = json::array();
  for (std::size_t j = 0; j < run.criterion_modes.size(); ++j)
    crit.push_back({{"mode", run.criterion_modes[j]}, {"variants", run.variant_counts[j]}});
  out["criteria"] = crit;
  return out;
}

void refresh_derived(Project& p, const SolverOptions& opts) {
  if (!p.derived.scales) p.derived.scales = scales_to_json(build_scales(p, opts));
  if (!p.capacity) return;
  if (!p.derived.capacity) p.derived.capacity = capacity_to_json(p, elicit_capacity(p));
  if (!p.derived.evaluation && !p.alternatives.empty())
    p.derived.evaluation = evaluation_to_json(evaluate_project(p, opts));
}

}  // namespace dcm
