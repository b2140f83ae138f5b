#include "dcm/service.hpp"

#include <httplib.h>

#include <algorithm>
#include <sstream>

namespace dcm {

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound:
      return 404;
    case ErrorCode::Conflict:
      return 409;
    case ErrorCode::Infeasible:
    case ErrorCode::InconsistentTable:
    case ErrorCode::NotConsistent:
    case ErrorCode::EmptyPolytope:
    case ErrorCode::MonotonicityViolated:
    case ErrorCode::CapacityInvalid:
    case ErrorCode::ComboExplosion:
    case ErrorCode::DomainExceeded:
      return 422;
    case ErrorCode::IoError:
      return 500;
    default:
      return 400;
  }
}

struct SessionService::Transport {
  httplib::Server server;
};

SessionService::SessionService(SolverOptions opts) : opts_(opts) {}
SessionService::~SessionService() { stop(); }

namespace {

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : path.substr(0, path.find('?'))) {
    if (c == '/') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json parse_body(const Request& req) {
  if (req.body.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("invalid JSON body: ") + e.what(),
                "byte " + std::to_string(e.byte));
  }
}

Error not_found(const std::string& what) { return Error(ErrorCode::NotFound, what); }

Error bad_method(const Request& req) {
  return Error(ErrorCode::NotFound, "no route for " + req.method + " " + req.path);
}

std::uint64_t read_u64(const json& j, const std::string& loc) {
  auto v = read_int(j, loc);
  if (v < 0) throw Error(ErrorCode::Validation, "expected a nonnegative integer", loc);
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Response SessionService::handle(const Request& req) {
  try {
    return dispatch(req);
  } catch (const Error& e) {
    return {http_status(e.code()), error_body(e)};
  } catch (const json::exception& e) {
    return {400, {{"code", "SchemaError"}, {"message", e.what()}, {"location", nullptr}}};
  } catch (const std::exception& e) {
    return {500, {{"code", "Internal"}, {"message", e.what()}, {"location", nullptr}}};
  }
}

std::shared_ptr<SessionService::Entry> SessionService::find(const std::string& id) {
  std::shared_lock lock(index_mu_);
  auto it = projects_.find(id);
  if (it == projects_.end()) throw not_found("unknown project '" + id + "'");
  return it->second;
}

Response SessionService::dispatch(const Request& req) {
  auto seg = split_path(req.path);
  if (seg.empty() || seg[0] != "projects") throw bad_method(req);

  if (seg.size() == 1) {
    if (req.method != "POST") throw bad_method(req);
    json body = parse_body(req);
    if (body.empty()) body = {{"version", kSchemaVersion}, {"criteria", json::array()}};
    auto entry = std::make_shared<Entry>();
    entry->project = project_from_json(body);
    std::string id;
    {
      std::unique_lock lock(index_mu_);
      id = "p" + std::to_string(next_id_++);
      projects_[id] = entry;
    }
    std::shared_lock lock(entry->mu);
    return {201, {{"id", id}, {"project", project_to_json(entry->project)}}};
  }

  auto entry = find(seg[1]);
  Entry& e = *entry;

  if (seg.size() == 2) {
    if (req.method == "GET") {
      std::shared_lock lock(e.mu);
      return {200, {{"id", seg[1]}, {"project", project_to_json(e.project)}}};
    }
    if (req.method == "PUT") {
      Project next = project_from_json(parse_body(req));
      std::unique_lock lock(e.mu);
      e.project = std::move(next);
      for (auto& [k, v] : e.revisions) ++v;
      e.repairs.clear();
      return {200, {{"id", seg[1]}, {"project", project_to_json(e.project)}}};
    }
    throw bad_method(req);
  }

  if (seg.size() == 3) {
    if (req.method != "POST") throw bad_method(req);
    const std::string& op = seg[2];
    std::unique_lock lock(e.mu);
    Project& p = e.project;
    if (op == "scales") {
      if (!p.derived.scales) p.derived.scales = scales_to_json(build_scales(p, opts_));
      return {200, {{"scales", *p.derived.scales}}};
    }
    if (op == "capacity") {
      if (!p.derived.capacity) p.derived.capacity = capacity_to_json(p, elicit_capacity(p));
      return {200, {{"capacity", *p.derived.capacity}}};
    }
    if (op == "evaluate") {
      if (!p.derived.evaluation) p.derived.evaluation = evaluation_to_json(evaluate_project(p, opts_));
      return {200, {{"evaluation", *p.derived.evaluation}}};
    }
    if (op == "smaa") {
      json body = parse_body(req);
      ObjectReader r(body, "");
      SmaaRequest sr;
      if (auto v = r.optional("mode")) {
        auto m = read_string(*v, r.path("mode"));
        if (m == "sample")
          sr.mode = SmaaMode::Sample;
        else if (m != "enumerate")
          throw Error(ErrorCode::Validation, "mode must be 'enumerate' or 'sample'", r.path("mode"));
      }
      if (auto v = r.optional("seed")) sr.seed = read_u64(*v, r.path("seed"));
      if (auto v = r.optional("samples")) sr.samples = read_u64(*v, r.path("samples"));
      if (auto v = r.optional("limit")) sr.limit = read_u64(*v, r.path("limit"));
      r.finish();
      if (sr.mode == SmaaMode::Sample && !sr.seed)
        throw Error(ErrorCode::Validation, "sampling needs an explicit seed", "/seed");
      json out = smaa_run_to_json(run_project_smaa(p, sr, opts_), sr.mode);
      p.derived.smaa = out;
      return {200, {{"smaa", out}}};
    }
    throw bad_method(req);
  }

  if (seg.size() >= 5 && seg[2] == "criteria")
    return criterion_call(e, seg[1], seg[3], std::vector<std::string>(seg.begin() + 4, seg.end()), req);
  throw bad_method(req);
}

Response SessionService::criterion_call(Entry& e, const std::string& id, const std::string& crit,
                                        const std::vector<std::string>& rest, const Request& req) {
  (void)id;
  const std::string& op = rest[0];
  auto lookup = [&]() { return e.project.criterion_index(crit); };

  if (op == "table" && rest.size() == 1) {
    if (req.method == "GET") {
      std::shared_lock lock(e.mu);
      std::size_t c = lookup();
      auto it = e.revisions.find(crit);
      std::uint64_t rev = it == e.revisions.end() ? 0 : it->second;
      return {200, {{"revision", rev}, {"table", table_to_json(e.project.criteria[c].table)}}};
    }
    if (req.method != "PUT") throw bad_method(req);
    auto tbl = table_from_json(parse_body(req));
    std::unique_lock lock(e.mu);
    std::size_t c = lookup();
    e.project.set_table(c, tbl);
    std::uint64_t rev = ++e.revisions[crit];
    e.repairs.erase(crit);
    return {200, {{"revision", rev}, {"table", table_to_json(e.project.criteria[c].table)}}};
  }

  if (op == "precise_table" && rest.size() == 1) {
    if (req.method != "PUT") throw bad_method(req);
    json body = parse_body(req);
    std::optional<PairwiseTable> tbl;
    if (!body.is_null() && !body.empty()) tbl = table_from_json(body);
    std::unique_lock lock(e.mu);
    std::size_t c = lookup();
    e.project.set_precise_table(c, tbl);
    return {200, {{"revision", e.revisions[crit]}}};
  }

  if (req.method != "POST") throw bad_method(req);

  if (op == "check" && rest.size() == 1) {
    std::shared_lock lock(e.mu);
    const auto& t = e.project.criteria[lookup()].table;
    json out = check_to_json(t, opts_);
    auto it = e.revisions.find(crit);
    out["revision"] = it == e.revisions.end() ? 0 : it->second;
    return {200, out};
  }

  if (op == "repairs" && rest.size() == 1) {
    std::unique_lock lock(e.mu);
    const auto& t = e.project.criteria[lookup()].table;
    Stored st;
    st.revision = e.revisions[crit];
    auto listing = list_repairs(t, opts_);
    st.repairs = listing.repairs;
    st.results = std::move(listing.results);
    const std::string& kind = listing.kind;
    json out = {{"revision", st.revision}, {"kind", kind}, {"repairs", st.repairs}};
    e.repairs[crit] = std::move(st);
    return {200, out};
  }

  if (op == "repairs" && rest.size() == 3 && rest[2] == "apply") {
    json body = parse_body(req);
    std::unique_lock lock(e.mu);
    std::size_t c = lookup();
    std::uint64_t current = e.revisions[crit];
    auto it = e.repairs.find(crit);
    if (it == e.repairs.end())
      throw Error(ErrorCode::Conflict, "no repairs computed for the current table; request /repairs first");
    if (it->second.revision != current)
      throw Error(ErrorCode::Conflict, "repair list is stale; the table changed since it was computed");
    if (body.is_object() && body.contains("revision") &&
        read_u64(body.at("revision"), "/revision") != current)
      throw Error(ErrorCode::Conflict, "revision mismatch", "/revision");
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoul(rest[1], &used);
      if (used != rest[1].size()) throw std::invalid_argument(rest[1]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Validation, "repair index must be a nonnegative integer");
    }
    if (k >= it->second.results.size()) throw not_found("unknown repair index " + rest[1]);
    e.project.set_table(c, it->second.results[k]);
    std::uint64_t rev = ++e.revisions[crit];
    e.repairs.erase(it);
    const auto& t = e.project.criteria[c].table;
    return {200, {{"revision", rev}, {"table", table_to_json(t)}, {"check", check_to_json(t, opts_)}}};
  }

  if (op == "completions" && rest.size() == 1) {
    json body = parse_body(req);
    ObjectReader r(body, "");
    std::size_t page = 100, offset = 0;
    std::shared_lock lock(e.mu);
    std::size_t c = lookup();
    auto rit = e.revisions.find(crit);
    std::uint64_t rev = rit == e.revisions.end() ? 0 : rit->second;
    if (auto v = r.optional("page_size")) page = static_cast<std::size_t>(read_u64(*v, r.path("page_size")));
    if (auto v = r.optional("token")) {
      auto tok = read_string(*v, r.path("token"));
      auto colon = tok.find(':');
      std::uint64_t trev = 0;
      try {
        if (colon == std::string::npos) throw std::invalid_argument(tok);
        trev = std::stoull(tok.substr(0, colon));
        offset = std::stoull(tok.substr(colon + 1));
      } catch (const std::exception&) {
        throw Error(ErrorCode::Validation, "malformed continuation token", r.path("token"));
      }
      if (trev != rev) throw Error(ErrorCode::Conflict, "continuation token is stale", r.path("token"));
    }
    r.finish();
    page = std::clamp<std::size_t>(page, 1, page_cap);
    const auto& t = e.project.criteria[c].table;
    SolverOptions o = opts_;
    o.max_results = std::min(opts_.max_results, offset + page + 1);
    Enumeration en = t.has_interval() || t.all_exact() ? enumerate_precise_extractions(t, o)
                                                       : enumerate_completions(t, o);
    json out = enumeration_to_json(en, offset, page);
    out.erase("count");
    out["revision"] = rev;
    out["offset"] = offset;
    bool more = en.tables.size() > offset + page;
    out["exhaustive"] = !more && (en.exhaustive || en.tables.size() < o.max_results);
    out["next_token"] = more ? json(std::to_string(rev) + ":" + std::to_string(offset + page)) : json(nullptr);
    return {200, out};
  }

  throw bad_method(req);
}

int SessionService::bind(const std::string& host, int port) {
  if (!transport_) {
    transport_ = std::make_unique<Transport>();
    auto h = [this](const httplib::Request& in, httplib::Response& out) {
      Response r = handle({in.method, in.path, in.body});
      out.status = r.status;
      out.set_content(r.body.dump(), "application/json");
    };
    transport_->server.Get(".*", h);
    transport_->server.Post(".*", h);
    transport_->server.Put(".*", h);
    transport_->server.Delete(".*", h);
  }
  if (port == 0) return transport_->server.bind_to_any_port(host);
  if (!transport_->server.bind_to_port(host, port))
    throw Error(ErrorCode::IoError, "cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void SessionService::listen() {
  if (!transport_) throw Error(ErrorCode::IoError, "bind() must be called first");
  transport_->server.listen_after_bind();
}

void SessionService::stop() {
  if (transport_) transport_->server.stop();
}

}  // namespace dcm
