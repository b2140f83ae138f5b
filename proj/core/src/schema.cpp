#include "dcm/schema.hpp"

#include <algorithm>
#include <cmath>

namespace dcm {

std::string pointer_join(const std::string& base, const std::string& key) {
  std::string out = base + "/";
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

std::string pointer_join(const std::string& base, std::size_t index) {
  return base + "/" + std::to_string(index);
}

ObjectReader::ObjectReader(const json& j, std::string location) : j_(j), loc_(std::move(location)) {
  if (!j.is_object())
    throw Error(ErrorCode::SchemaError, "expected an object", loc_.empty() ? "/" : loc_);
}

bool ObjectReader::has(const std::string& key) const { return j_.contains(key); }

const json& ObjectReader::required(const std::string& key) {
  if (!j_.contains(key))
    throw Error(ErrorCode::SchemaError, "missing field '" + key + "'", loc_.empty() ? "/" : loc_);
  used_.push_back(key);
  return j_.at(key);
}

const json* ObjectReader::optional(const std::string& key) {
  if (!j_.contains(key)) return nullptr;
  used_.push_back(key);
  return &j_.at(key);
}

std::string ObjectReader::path(const std::string& key) const { return pointer_join(loc_, key); }

void ObjectReader::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it)
    if (std::find(used_.begin(), used_.end(), it.key()) == used_.end())
      throw Error(ErrorCode::SchemaError, "unknown field '" + it.key() + "'",
                  pointer_join(loc_, it.key()));
}

std::int64_t read_int(const json& j, const std::string& loc) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) {
    double v = j.get<double>();
    if (std::floor(v) == v && std::fabs(v) < 9e15) return static_cast<std::int64_t>(v);
  }
  throw Error(ErrorCode::SchemaError, "expected an integer", loc);
}

double read_number(const json& j, const std::string& loc) {
  if (!j.is_number()) throw Error(ErrorCode::SchemaError, "expected a number", loc);
  return j.get<double>();
}

std::string read_string(const json& j, const std::string& loc) {
  if (!j.is_string()) throw Error(ErrorCode::SchemaError, "expected a string", loc);
  return j.get<std::string>();
}

void check_version(const json& j, const std::string& loc) {
  auto v = read_int(j, loc);
  if (v != kSchemaVersion)
    throw Error(ErrorCode::SchemaError,
                "unsupported schema version " + std::to_string(v) + " (supported: " +
                    std::to_string(kSchemaVersion) + ")",
                loc);
}

json error_body(const Error& e) {
  json out = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  out["location"] = e.location().empty() ? json(nullptr) : json(e.location());
  return out;
}

PairwiseTable table_from_json(const json& j, const std::string& loc) {
  ObjectReader r(j, loc);
  if (auto v = r.optional("version")) check_version(*v, r.path("version"));
  const json& lv = r.required("levels");
  const std::string lv_loc = r.path("levels");
  int t = 0;
  std::vector<std::string> labels;
  std::vector<double> coords;
  if (lv.is_array()) {
    t = static_cast<int>(lv.size());
    std::size_t with_coord = 0;
    for (std::size_t k = 0; k < lv.size(); ++k) {
      ObjectReader lr(lv[k], pointer_join(lv_loc, k));
      std::string label;
      if (auto l = lr.optional("label")) label = read_string(*l, lr.path("label"));
      labels.push_back(label);
      if (auto c = lr.optional("coordinate")) {
        coords.push_back(read_number(*c, lr.path("coordinate")));
        ++with_coord;
      }
      lr.finish();
    }
    if (with_coord != 0 && with_coord != lv.size())
      throw Error(ErrorCode::SchemaError, "coordinates must be given for all levels or none", lv_loc);
    if (std::all_of(labels.begin(), labels.end(), [](const std::string& s) { return s.empty(); }))
      labels.clear();
  } else {
    t = static_cast<int>(read_int(lv, lv_loc));
  }
  if (t < 2) throw Error(ErrorCode::SchemaError, "a table needs at least two levels", lv_loc);
  PairwiseTable tbl(t);
  tbl.labels = labels;
  tbl.coordinates = coords;
  try {
    validate_levels(tbl);
  } catch (const Error& e) {
    throw Error(ErrorCode::SchemaError, e.what(), lv_loc);
  }

  const json& cells = r.required("cells");
  const std::string cells_loc = r.path("cells");
  if (!cells.is_array()) throw Error(ErrorCode::SchemaError, "expected an array", cells_loc);
  std::vector<bool> seen(tbl.cell_count(), false);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string cl = pointer_join(cells_loc, i);
    ObjectReader cr(cells[i], cl);
    auto p = read_int(cr.required("p"), cr.path("p"));
    auto q = read_int(cr.required("q"), cr.path("q"));
    if (p < 1 || q > t || p >= q)
      throw Error(ErrorCode::SchemaError, "pair outside the upper triangle", cl);
    std::size_t idx = tbl.index(static_cast<int>(p), static_cast<int>(q));
    if (seen[idx]) throw Error(ErrorCode::SchemaError, "cell listed twice", cl);
    seen[idx] = true;
    std::string kind = read_string(cr.required("kind"), cr.path("kind"));
    const json* vals = cr.optional("values");
    std::vector<std::int64_t> v;
    if (vals) {
      if (!vals->is_array()) throw Error(ErrorCode::SchemaError, "expected an array", cr.path("values"));
      for (std::size_t k = 0; k < vals->size(); ++k)
        v.push_back(read_int((*vals)[k], pointer_join(cr.path("values"), k)));
    }
    for (auto x : v)
      if (x < 0) throw Error(ErrorCode::SchemaError, "card counts must be nonnegative", cr.path("values"));
    Cell c;
    if (kind == "exact") {
      if (v.size() != 1) throw Error(ErrorCode::SchemaError, "exact cell needs one value", cr.path("values"));
      c = Cell::exact(v[0]);
    } else if (kind == "interval") {
      if (v.size() != 2 || v[0] > v[1])
        throw Error(ErrorCode::SchemaError, "interval cell needs [lo, hi] with lo <= hi", cr.path("values"));
      c = Cell::interval(v[0], v[1]);
    } else if (kind == "missing") {
      if (!v.empty()) throw Error(ErrorCode::SchemaError, "missing cell takes no values", cr.path("values"));
      c = Cell::missing();
    } else {
      throw Error(ErrorCode::SchemaError, "unknown cell kind '" + kind + "'", cr.path("kind"));
    }
    cr.finish();
    tbl.set(static_cast<int>(p), static_cast<int>(q), c);
  }
  r.finish();
  return tbl;
}

namespace {
json levels_json(int t, const std::vector<std::string>& labels, const std::vector<double>& coords) {
  if (labels.empty() && coords.empty()) return t;
  json arr = json::array();
  for (int k = 0; k < t; ++k) {
    json l = json::object();
    auto ki = static_cast<std::size_t>(k);
    if (ki < labels.size() && !labels[ki].empty()) l["label"] = labels[ki];
    if (ki < coords.size()) l["coordinate"] = coords[ki];
    arr.push_back(l);
  }
  return arr;
}
}  // namespace

json table_to_json(const PairwiseTable& tbl, bool with_version) {
  json out = json::object();
  if (with_version) out["version"] = kSchemaVersion;
  out["levels"] = levels_json(tbl.levels(), tbl.labels, tbl.coordinates);
  json cells = json::array();
  for (const Pair& pr : tbl.pairs()) {
    const Cell& c = tbl.at(pr.p, pr.q);
    json cj = {{"p", pr.p}, {"q", pr.q}};
    if (c.is_exact()) {
      cj["kind"] = "exact";
      cj["values"] = {c.lo};
    } else if (c.is_interval()) {
      cj["kind"] = "interval";
      cj["values"] = {c.lo, c.hi};
    } else {
      cj["kind"] = "missing";
    }
    cells.push_back(cj);
  }
  out["cells"] = cells;
  return out;
}

json continuous_table_to_json(const ContinuousTable& tbl) {
  json out = {{"version", kSchemaVersion}, {"domain", "continuous"}, {"levels", tbl.levels()}};
  json cells = json::array();
  for (int p = 1; p < tbl.levels(); ++p)
    for (int q = p + 1; q <= tbl.levels(); ++q)
      cells.push_back({{"p", p}, {"q", q}, {"kind", "exact"}, {"values", {tbl.at(p, q)}}});
  out["cells"] = cells;
  return out;
}

namespace {
json pair_json(const Pair& pr) { return json::array({pr.p, pr.q}); }
}  // namespace

json violations_to_json(const std::vector<Violation>& v) {
  json arr = json::array();
  for (const auto& x : v)
    arr.push_back({{"triple", {x.p, x.k, x.q}}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  return arr;
}

json repair_to_json(const RepairSolution& r) {
  json mod = json::array(), del = json::array();
  for (std::size_t i = 0; i < r.modified.size(); ++i) {
    mod.push_back(pair_json(r.modified[i]));
    del.push_back({{"pair", pair_json(r.modified[i])}, {"delta", r.deltas[i]}});
  }
  return {{"z", r.z()}, {"modified", mod}, {"deltas", del}, {"gaps", r.gaps},
          {"table", table_to_json(r.repaired, false)}};
}

json interval_repair_to_json(const IntervalRepairSolution& r) {
  json mod = json::array(), ch = json::array();
  for (const auto& c : r.changes) {
    mod.push_back(pair_json(c.pair));
    ch.push_back({{"pair", pair_json(c.pair)},
                  {"from", {c.old_lo, c.old_hi}},
                  {"to", {c.new_lo, c.new_hi}}});
  }
  return {{"z", r.z()},
          {"modified", mod},
          {"bounds", ch},
          {"gaps", r.gaps},
          {"table", table_to_json(r.adjusted, false)},
          {"witness", table_to_json(r.witness, false)}};
}

json enumeration_to_json(const Enumeration& en, std::size_t offset, std::size_t count) {
  json tables = json::array();
  for (std::size_t i = offset; i < en.tables.size() && i - offset < count; ++i)
    tables.push_back({{"gaps", en.gaps[i]}, {"table", table_to_json(en.tables[i], false)}});
  json out = {{"count", en.tables.size()},
              {"exhaustive", en.exhaustive},
              {"unbounded", en.unbounded},
              {"tables", tables}};
  if (en.unbounded) out["domain_bound"] = en.domain_bound;
  return out;
}

json completion_to_json(const Completion& c) {
  json flagged = json::array();
  for (std::size_t i = 0; i < c.flagged.size(); ++i)
    flagged.push_back({{"pair", pair_json(c.flagged[i])}, {"delta", c.deltas[i]}});
  return {{"z", c.z}, {"flagged", flagged}, {"gaps", c.gaps},
          {"table", table_to_json(c.completion, false)}};
}

json scale_to_json(const ValueScale& s) {
  json out = {{"anchors", json::array({{{"level", s.low.level}, {"utility", s.low.utility}},
                                       {{"level", s.high.level}, {"utility", s.high.utility}}})},
              {"alpha", s.alpha},
              {"utilities", s.utilities}};
  if (!s.coordinates.empty()) out["coordinates"] = s.coordinates;
  return out;
}

json smaa_to_json(const SmaaResult& r, const std::vector<std::string>& alternatives) {
  json out = {{"combination_count", r.combination_count},
              {"sampled", r.sampled},
              {"alternatives", alternatives},
              {"b", r.b()},
              {"p", r.p()},
              {"rank_counts", r.rank_counts},
              {"win_counts", r.win_counts}};
  if (r.seed) out["seed"] = *r.seed;
  return out;
}

std::string table_kind(const PairwiseTable& tbl) {
  if (tbl.all_exact()) return "exact";
  if (!tbl.has_interval()) return "missing";
  return tbl.has_missing() ? "mixed" : "interval";
}

json check_to_json(const PairwiseTable& tbl, const SolverOptions& opts) {
  if (tbl.all_exact()) {
    auto v = check_consistency(tbl);
    return {{"kind", "exact"}, {"consistent", v.empty()}, {"violations", violations_to_json(v)}};
  }
  auto r = mixed_repair(tbl, opts);
  json mod = json::array();
  for (const auto& c : r.changes) mod.push_back(pair_json(c.pair));
  return {{"kind", table_kind(tbl)}, {"consistent", r.z() == 0}, {"z", r.z()},
          {"modified", mod}, {"violations", json::array()}};
}

RepairListing list_repairs(const PairwiseTable& tbl, const SolverOptions& opts) {
  RepairListing out{table_kind(tbl), json::array(), {}};
  std::size_t k = 0;
  auto push = [&](json body, const PairwiseTable& result) {
    json j = {{"index", k++}};
    for (auto& [key, v] : body.items()) j[key] = v;
    out.repairs.push_back(j);
    out.results.push_back(result);
  };
  if (tbl.all_exact()) {
    for (const auto& r : enumerate_repairs(tbl, opts)) push(repair_to_json(r), r.repaired);
  } else {
    for (const auto& r : enumerate_interval_repairs(tbl, opts))
      push(interval_repair_to_json(r), r.adjusted);
  }
  return out;
}

}  // namespace dcm
