#include "dcm/project.hpp"

#include <fstream>
#include <sstream>

namespace dcm {

std::size_t Project::criterion_index(const std::string& id) const {
  for (std::size_t i = 0; i < criteria.size(); ++i)
    if (criteria[i].id == id) return i;
  throw Error(ErrorCode::NotFound, "unknown criterion '" + id + "'");
}

DummyProjectRanking Project::ranking() const {
  if (!capacity) throw Error(ErrorCode::Validation, "project has no capacity ranking", "/capacity");
  DummyProjectRanking r;
  r.criteria = static_cast<int>(criteria.size());
  r.pairs = capacity->pairs;
  r.classes = capacity->classes;
  r.ratio = capacity->ratio;
  r.base = capacity->base;
  if (capacity->cards) {
    r.cards = *capacity->cards;
  } else if (capacity->table) {
    if (capacity->table->levels() != static_cast<int>(r.classes.size()))
      throw Error(ErrorCode::BadRanking, "ranking table needs one level per class",
                  "/capacity/table");
    r.cards = cards_from_table(*capacity->table);
  } else {
    throw Error(ErrorCode::BadRanking, "ranking needs cards or a table", "/capacity");
  }
  return r;
}

namespace {

bool fits(const PairwiseTable& precise, const PairwiseTable& bounds) {
  if (precise.levels() != bounds.levels() || !precise.all_exact()) return false;
  for (std::size_t i = 0; i < bounds.cell_count(); ++i)
    if (!bounds.at(i).contains(precise.at(i).lo)) return false;
  return check_consistency(precise).empty();
}

}  // namespace

void Project::set_table(std::size_t c, const PairwiseTable& tbl) {
  Criterion& cr = criteria.at(c);
  PairwiseTable next = tbl;
  if (next.labels.empty()) next.labels = cr.table.labels;
  if (next.coordinates.empty() && next.levels() == cr.table.levels())
    next.coordinates = cr.table.coordinates;
  validate_levels(next);
  cr.table = next;
  if (cr.precise_table && !fits(*cr.precise_table, cr.table)) cr.precise_table.reset();
  derived.scales.reset();
  derived.evaluation.reset();
  derived.smaa.reset();
}

void Project::set_precise_table(std::size_t c, const std::optional<PairwiseTable>& tbl) {
  Criterion& cr = criteria.at(c);
  if (tbl && !fits(*tbl, cr.table))
    throw Error(ErrorCode::Validation,
                "precise table must be consistent and inside the criterion's bounds");
  cr.precise_table = tbl;
  derived.scales.reset();
  derived.evaluation.reset();
  derived.smaa.reset();
}

void Project::set_capacity(const std::optional<CapacitySpec>& spec) {
  capacity = spec;
  derived.capacity.reset();
  derived.evaluation.reset();
  derived.smaa.reset();
}

void Project::set_alternatives(const std::vector<Alternative>& alts) {
  alternatives = alts;
  derived.evaluation.reset();
  derived.smaa.reset();
}

namespace {

std::string direction_name(Direction d) { return d == Direction::Min ? "min" : "max"; }

std::string mode_name(VariantMode m) {
  switch (m) {
    case VariantMode::Auto: return "auto";
    case VariantMode::Fixed: return "fixed";
    case VariantMode::Enumerate: return "enumerate";
    case VariantMode::Sample: return "sample";
  }
  return "auto";
}

std::string sign_name(InteractionSign s) {
  switch (s) {
    case InteractionSign::Positive: return "positive";
    case InteractionSign::Negative: return "negative";
    default: return "unspecified";
  }
}

Anchor read_anchor(const json& j, const std::string& loc, int t) {
  ObjectReader r(j, loc);
  Anchor a;
  a.level = static_cast<int>(read_int(r.required("level"), r.path("level")));
  a.utility = read_number(r.required("utility"), r.path("utility"));
  r.finish();
  if (a.level < 1 || a.level > t) throw Error(ErrorCode::SchemaError, "anchor level out of range", loc);
  return a;
}

Criterion read_criterion(const json& j, const std::string& loc) {
  ObjectReader r(j, loc);
  Criterion c;
  c.id = read_string(r.required("id"), r.path("id"));
  if (c.id.empty() || c.id.find('+') != std::string::npos)
    throw Error(ErrorCode::SchemaError, "criterion id must be nonempty and free of '+'", r.path("id"));
  if (auto v = r.optional("label")) c.label = read_string(*v, r.path("label"));
  if (auto v = r.optional("direction")) {
    auto d = read_string(*v, r.path("direction"));
    if (d == "min")
      c.direction = Direction::Min;
    else if (d != "max")
      throw Error(ErrorCode::SchemaError, "direction must be 'min' or 'max'", r.path("direction"));
  }
  c.table = table_from_json(r.required("table"), r.path("table"));
  const auto& co = c.table.coordinates;
  if (co.size() >= 2) {
    bool increasing = co[1] > co[0];
    if (increasing != (c.direction == Direction::Max))
      throw Error(ErrorCode::SchemaError,
                  "levels run worst to best, so coordinates must " +
                      std::string(c.direction == Direction::Max ? "increase" : "decrease") +
                      " for direction '" + direction_name(c.direction) + "'",
                  r.path("direction"));
  }
  if (auto v = r.optional("precise_table")) {
    c.precise_table = table_from_json(*v, r.path("precise_table"));
    if (!fits(*c.precise_table, c.table))
      throw Error(ErrorCode::SchemaError,
                  "precise table must be consistent and inside the criterion's bounds",
                  r.path("precise_table"));
    c.precise_table->labels = c.table.labels;
    c.precise_table->coordinates = c.table.coordinates;
  }
  if (auto v = r.optional("anchors")) {
    if (!v->is_array() || v->size() != 2)
      throw Error(ErrorCode::SchemaError, "anchors must list two levels", r.path("anchors"));
    c.low = read_anchor((*v)[0], pointer_join(r.path("anchors"), 0), c.table.levels());
    c.high = read_anchor((*v)[1], pointer_join(r.path("anchors"), 1), c.table.levels());
    if (!(c.low->level < c.high->level) || !(c.low->utility < c.high->utility))
      throw Error(ErrorCode::SchemaError, "anchors need p < q and u_p < u_q", r.path("anchors"));
  }
  if (auto v = r.optional("variants")) {
    auto m = read_string(*v, r.path("variants"));
    if (m == "auto")
      c.variants = VariantMode::Auto;
    else if (m == "fixed")
      c.variants = VariantMode::Fixed;
    else if (m == "enumerate")
      c.variants = VariantMode::Enumerate;
    else if (m == "sample")
      c.variants = VariantMode::Sample;
    else
      throw Error(ErrorCode::SchemaError, "unknown variants mode '" + m + "'", r.path("variants"));
  }
  r.finish();
  return c;
}

Alternative read_alternative(const json& j, const std::string& loc,
                             const std::vector<Criterion>& criteria) {
  ObjectReader r(j, loc);
  Alternative a;
  a.id = read_string(r.required("id"), r.path("id"));
  if (auto v = r.optional("label")) a.label = read_string(*v, r.path("label"));
  const json& perf = r.required("performances");
  const std::string ploc = r.path("performances");
  if (!perf.is_object()) throw Error(ErrorCode::SchemaError, "expected an object", ploc);
  for (auto it = perf.begin(); it != perf.end(); ++it) {
    bool known = false;
    for (const auto& c : criteria) known = known || c.id == it.key();
    if (!known)
      throw Error(ErrorCode::SchemaError, "unknown criterion '" + it.key() + "'",
                  pointer_join(ploc, it.key()));
  }
  for (const auto& c : criteria) {
    const std::string cl = pointer_join(ploc, c.id);
    if (!perf.contains(c.id))
      throw Error(ErrorCode::SchemaError, "missing performance on '" + c.id + "'", ploc);
    const json& pj = perf.at(c.id);
    ObjectReader pr(pj, cl);
    if (pj.size() != 1)
      throw Error(ErrorCode::SchemaError, "performance needs exactly one of value, level, utility", cl);
    Performance p;
    if (auto v = pr.optional("value")) {
      p = {Performance::Kind::Value, read_number(*v, pr.path("value"))};
    } else if (auto v = pr.optional("level")) {
      auto lv = read_int(*v, pr.path("level"));
      if (lv < 1 || lv > c.table.levels())
        throw Error(ErrorCode::SchemaError, "level out of range", pr.path("level"));
      p = {Performance::Kind::Level, static_cast<double>(lv)};
    } else if (auto v = pr.optional("utility")) {
      p = {Performance::Kind::Utility, read_number(*v, pr.path("utility"))};
    }
    pr.finish();
    a.performances.push_back(p);
  }
  r.finish();
  return a;
}

DummyProject read_project_ref(const json& j, const std::string& loc,
                              const std::vector<Criterion>& criteria) {
  auto s = read_string(j, loc);
  auto find = [&](const std::string& id) {
    for (std::size_t i = 0; i < criteria.size(); ++i)
      if (criteria[i].id == id) return static_cast<int>(i);
    throw Error(ErrorCode::SchemaError, "unknown criterion '" + id + "'", loc);
  };
  auto plus = s.find('+');
  if (plus == std::string::npos) return {find(s), -1};
  return {find(s.substr(0, plus)), find(s.substr(plus + 1))};
}

CapacitySpec read_capacity(const json& j, const std::string& loc,
                           const std::vector<Criterion>& criteria) {
  ObjectReader r(j, loc);
  CapacitySpec cs;
  if (auto v = r.optional("pairs")) {
    if (!v->is_array()) throw Error(ErrorCode::SchemaError, "expected an array", r.path("pairs"));
    for (std::size_t i = 0; i < v->size(); ++i) {
      const std::string pl = pointer_join(r.path("pairs"), i);
      ObjectReader pr((*v)[i], pl);
      const json& cj = pr.required("criteria");
      if (!cj.is_array() || cj.size() != 2)
        throw Error(ErrorCode::SchemaError, "pair needs two criteria", pr.path("criteria"));
      auto a = read_project_ref(cj[0], pointer_join(pr.path("criteria"), 0), criteria);
      auto b = read_project_ref(cj[1], pointer_join(pr.path("criteria"), 1), criteria);
      if (a.is_pair() || b.is_pair() || a.i == b.i)
        throw Error(ErrorCode::SchemaError, "pair needs two distinct criteria", pr.path("criteria"));
      InteractionPair ip{a.i, b.i, InteractionSign::Unspecified};
      if (auto s = pr.optional("sign")) {
        auto sv = read_string(*s, pr.path("sign"));
        if (sv == "positive")
          ip.hint = InteractionSign::Positive;
        else if (sv == "negative")
          ip.hint = InteractionSign::Negative;
        else if (sv != "unspecified")
          throw Error(ErrorCode::SchemaError, "sign must be positive, negative or unspecified",
                      pr.path("sign"));
      }
      pr.finish();
      cs.pairs.push_back(ip);
    }
  }
  const json& rk = r.required("ranking");
  if (!rk.is_array()) throw Error(ErrorCode::SchemaError, "expected an array", r.path("ranking"));
  for (std::size_t h = 0; h < rk.size(); ++h) {
    const std::string hl = pointer_join(r.path("ranking"), h);
    if (!rk[h].is_array() || rk[h].empty())
      throw Error(ErrorCode::SchemaError, "each class is a nonempty array", hl);
    std::vector<DummyProject> cls;
    for (std::size_t k = 0; k < rk[h].size(); ++k)
      cls.push_back(read_project_ref(rk[h][k], pointer_join(hl, k), criteria));
    cs.classes.push_back(cls);
  }
  if (auto v = r.optional("cards")) {
    std::vector<Cards> cards;
    if (!v->is_array()) throw Error(ErrorCode::SchemaError, "expected an array", r.path("cards"));
    for (std::size_t i = 0; i < v->size(); ++i)
      cards.push_back(read_int((*v)[i], pointer_join(r.path("cards"), i)));
    cs.cards = cards;
  }
  if (auto v = r.optional("table")) cs.table = table_from_json(*v, r.path("table"));
  if (cs.cards.has_value() == cs.table.has_value())
    throw Error(ErrorCode::SchemaError, "capacity needs exactly one of 'cards' or 'table'", loc);
  cs.ratio = read_number(r.required("z"), r.path("z"));
  if (auto v = r.optional("ell")) cs.base = read_number(*v, r.path("ell"));
  r.finish();
  return cs;
}

std::string project_ref_name(const DummyProject& dp, const std::vector<Criterion>& criteria) {
  std::string s = criteria.at(static_cast<std::size_t>(dp.i)).id;
  if (dp.is_pair()) s += "+" + criteria.at(static_cast<std::size_t>(dp.j)).id;
  return s;
}

}  // namespace

Project project_from_json(const json& j) {
  ObjectReader r(j, "");
  check_version(r.required("version"), r.path("version"));
  Project p;
  if (auto v = r.optional("name")) p.name = read_string(*v, r.path("name"));
  const json& cr = r.required("criteria");
  if (!cr.is_array()) throw Error(ErrorCode::SchemaError, "expected an array", r.path("criteria"));
  for (std::size_t i = 0; i < cr.size(); ++i) {
    auto c = read_criterion(cr[i], pointer_join(r.path("criteria"), i));
    for (const auto& o : p.criteria)
      if (o.id == c.id)
        throw Error(ErrorCode::SchemaError, "duplicate criterion id '" + c.id + "'",
                    pointer_join(pointer_join(r.path("criteria"), i), "id"));
    p.criteria.push_back(std::move(c));
  }
  if (auto v = r.optional("alternatives")) {
    if (!v->is_array()) throw Error(ErrorCode::SchemaError, "expected an array", r.path("alternatives"));
    for (std::size_t i = 0; i < v->size(); ++i)
      p.alternatives.push_back(
          read_alternative((*v)[i], pointer_join(r.path("alternatives"), i), p.criteria));
  }
  if (auto v = r.optional("capacity")) p.capacity = read_capacity(*v, r.path("capacity"), p.criteria);
  if (auto v = r.optional("derived")) {
    ObjectReader dr(*v, r.path("derived"));
    if (auto x = dr.optional("scales")) p.derived.scales = *x;
    if (auto x = dr.optional("capacity")) p.derived.capacity = *x;
    if (auto x = dr.optional("evaluation")) p.derived.evaluation = *x;
    if (auto x = dr.optional("smaa")) p.derived.smaa = *x;
    dr.finish();
  }
  r.finish();
  return p;
}

json project_to_json(const Project& p) {
  json out = {{"version", kSchemaVersion}};
  if (!p.name.empty()) out["name"] = p.name;
  json crit = json::array();
  for (const auto& c : p.criteria) {
    json cj = {{"id", c.id}};
    if (!c.label.empty()) cj["label"] = c.label;
    cj["direction"] = direction_name(c.direction);
    cj["table"] = table_to_json(c.table, false);
    if (c.precise_table) {
      PairwiseTable bare = *c.precise_table;
      bare.labels.clear();
      bare.coordinates.clear();
      cj["precise_table"] = table_to_json(bare, false);
    }
    if (c.low && c.high)
      cj["anchors"] = json::array({{{"level", c.low->level}, {"utility", c.low->utility}},
                                   {{"level", c.high->level}, {"utility", c.high->utility}}});
    if (c.variants != VariantMode::Auto) cj["variants"] = mode_name(c.variants);
    crit.push_back(cj);
  }
  out["criteria"] = crit;
  json alts = json::array();
  for (const auto& a : p.alternatives) {
    json aj = {{"id", a.id}};
    if (!a.label.empty()) aj["label"] = a.label;
    json perf = json::object();
    for (std::size_t i = 0; i < p.criteria.size(); ++i) {
      const auto& pf = a.performances.at(i);
      if (pf.kind == Performance::Kind::Value)
        perf[p.criteria[i].id] = {{"value", pf.value}};
      else if (pf.kind == Performance::Kind::Level)
        perf[p.criteria[i].id] = {{"level", static_cast<std::int64_t>(pf.value)}};
      else
        perf[p.criteria[i].id] = {{"utility", pf.value}};
    }
    aj["performances"] = perf;
    alts.push_back(aj);
  }
  out["alternatives"] = alts;
  if (p.capacity) {
    const auto& cs = *p.capacity;
    json pairs = json::array();
    for (const auto& ip : cs.pairs) {
      json pj = {{"criteria", {p.criteria.at(static_cast<std::size_t>(ip.i)).id,
                               p.criteria.at(static_cast<std::size_t>(ip.j)).id}}};
      if (ip.hint != InteractionSign::Unspecified) pj["sign"] = sign_name(ip.hint);
      pairs.push_back(pj);
    }
    json rk = json::array();
    for (const auto& cls : cs.classes) {
      json cj = json::array();
      for (const auto& dp : cls) cj.push_back(project_ref_name(dp, p.criteria));
      rk.push_back(cj);
    }
    json cj = {{"pairs", pairs}, {"ranking", rk}};
    if (cs.cards) cj["cards"] = *cs.cards;
    if (cs.table) cj["table"] = table_to_json(*cs.table, false);
    cj["z"] = cs.ratio;
    cj["ell"] = cs.base;
    out["capacity"] = cj;
  }
  if (!p.derived.empty()) {
    json d = json::object();
    if (p.derived.scales) d["scales"] = *p.derived.scales;
    if (p.derived.capacity) d["capacity"] = *p.derived.capacity;
    if (p.derived.evaluation) d["evaluation"] = *p.derived.evaluation;
    if (p.derived.smaa) d["smaa"] = *p.derived.smaa;
    out["derived"] = d;
  }
  return out;
}

std::string dump_json(const json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what(),
                "byte " + std::to_string(e.byte));
  }
}

Project load_project(const std::string& path) { return project_from_json(read_json_file(path)); }

void save_project(const Project& p, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << dump_json(project_to_json(p));
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace dcm
