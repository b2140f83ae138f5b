#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dcm/pipeline.hpp"
#include "dcm/project.hpp"
#include "dcm/schema.hpp"
#include "text.hpp"

namespace {

using namespace dcm;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInfeasible = 2;

struct Common {
  std::string file;
  std::string criterion;
  std::string format = "json";
  bool pretty = false;
  std::optional<Cards> card_limit;
};

struct Input {
  std::optional<Project> project;
  PairwiseTable table;
  std::optional<std::size_t> criterion;
};

void add_common(CLI::App* sub, Common& c, bool needs_table) {
  sub->add_option("file", c.file, needs_table ? "Table or project file" : "Project file")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("-c,--criterion", c.criterion, "Criterion id when reading a project file");
  sub->add_option("-f,--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  sub->add_flag("--pretty", c.pretty, "Human-readable tables (same as --format table)");
  sub->add_option("--card-limit", c.card_limit, "Bound on card counts and free gaps (env DCM_CARD_LIMIT)")
      ->check(CLI::PositiveNumber);
}

SolverOptions solver_options(const Common& c) {
  SolverOptions o = solver_options_from_env();
  if (c.card_limit) o.card_limit = *c.card_limit;
  return o;
}

Input read_input(const Common& c, bool needs_table) {
  json j = read_json_file(c.file);
  Input in;
  if (j.is_object() && j.contains("criteria")) {
    in.project = project_from_json(j);
    if (!c.criterion.empty()) {
      in.criterion = in.project->criterion_index(c.criterion);
    } else if (needs_table) {
      if (in.project->criteria.size() != 1)
        throw Error(ErrorCode::Validation, "project has several criteria; pick one with --criterion");
      in.criterion = 0;
    }
    if (in.criterion) in.table = in.project->criteria[*in.criterion].table;
    return in;
  }
  if (!c.criterion.empty()) throw Error(ErrorCode::Validation, "--criterion needs a project file");
  in.table = table_from_json(j);
  return in;
}

const Project& need_project(const Input& in) {
  if (!in.project) throw Error(ErrorCode::Validation, "this command needs a project file");
  return *in.project;
}

void emit(const Common& c, const std::string& command, const json& out) {
  if (c.pretty || c.format == "table")
    std::cout << cli::render_text(command, out);
  else
    std::cout << out.dump(2) << "\n";
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Infeasible:
    case ErrorCode::NotConsistent:
    case ErrorCode::InconsistentTable:
    case ErrorCode::EmptyPolytope:
    case ErrorCode::MonotonicityViolated:
    case ErrorCode::CapacityInvalid:
      return kExitInfeasible;
    default:
      return kExitValidation;
  }
}

std::pair<Anchor, Anchor> parse_anchors(const std::string& s) {
  auto bad = [&] { return Error(ErrorCode::Validation, "anchors must look like p:u,q:u", "--anchors"); };
  auto comma = s.find(',');
  if (comma == std::string::npos) throw bad();
  auto one = [&](const std::string& part) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw bad();
    try {
      std::size_t used = 0;
      Anchor a{std::stoi(part.substr(0, colon), &used), 0.0};
      if (used != colon) throw bad();
      std::string u = part.substr(colon + 1);
      a.utility = std::stod(u, &used);
      if (used != u.size()) throw bad();
      return a;
    } catch (const std::logic_error&) {
      throw bad();
    }
  };
  return {one(s.substr(0, comma)), one(s.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deck-of-cards comparison tables: consistency, repair, scales, capacities and SMAA"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dcm 0.3.0");

  Common c;
  bool enumerate = false;
  std::size_t limit = 0;
  std::size_t n = 100;
  std::optional<std::uint64_t> seed;
  std::string anchors;
  std::string smaa_mode = "enum";
  std::uint64_t samples = 10000;
  std::uint64_t combo_limit = kDefaultComboLimit;
  bool graph = false, bars = false;
  std::string graph_name = "pct";

  auto* check = app.add_subcommand("check", "Report consistency violations or the minimal repair size");
  add_common(check, c, true);

  auto* repair = app.add_subcommand("repair", "Minimal repair of an inconsistent table");
  add_common(repair, c, true);
  repair->add_flag("--enumerate", enumerate, "List every cut-separated minimal repair");

  auto* complete = app.add_subcommand("complete", "Fill missing cells consistently");
  add_common(complete, c, true);
  complete->add_flag("--enumerate", enumerate, "List every consistent completion");

  auto* extract = app.add_subcommand("extract", "Enumerate consistent precise tables inside the intervals");
  add_common(extract, c, true);
  extract->add_option("--limit", limit, "Stop after this many tables (0 keeps the solver cap)");

  auto* sample = app.add_subcommand("sample", "Hit-and-run samples of real-valued consistent tables");
  add_common(sample, c, true);
  sample->add_option("--n", n, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "Random seed")->required();

  auto* scale = app.add_subcommand("scale", "Interval value scale from a consistent table");
  add_common(scale, c, false);
  scale->add_option("--anchors", anchors, "Reference levels and utilities, p:u,q:u (default 1:0,t:100)");

  auto* capacity = app.add_subcommand("capacity", "2-additive capacity from the dummy-project ranking");
  add_common(capacity, c, false);

  auto* evaluate = app.add_subcommand("evaluate", "Choquet values of the alternatives");
  add_common(evaluate, c, false);

  auto* smaa = app.add_subcommand("smaa", "Rank acceptability and pairwise winning indices");
  add_common(smaa, c, false);
  smaa->add_option("--mode", smaa_mode, "enum or sample")->check(CLI::IsMember({"enum", "sample"}));
  smaa->add_option("--seed", seed, "Random seed (required for sample mode)");
  smaa->add_option("--samples", samples, "Tables sampled per continuous criterion");
  smaa->add_option("--limit", combo_limit, "Largest combination count evaluated exhaustively");

  auto* exporter = app.add_subcommand("export", "Graph or bar view of an exact table");
  add_common(exporter, c, true);
  auto* g = exporter->add_flag("--graph", graph, "Graphviz DOT digraph");
  auto* b = exporter->add_flag("--bars", bars, "Bar lengths e+1 per pair");
  g->excludes(b);
  exporter->add_option("--name", graph_name, "Graph name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    const SolverOptions opts = solver_options(c);
    if (check->parsed()) {
      auto in = read_input(c, true);
      json out = check_to_json(in.table, opts);
      emit(c, "check", out);
      return out["consistent"].get<bool>() ? kExitOk : kExitInfeasible;
    }
    if (repair->parsed()) {
      auto in = read_input(c, true);
      json out;
      if (enumerate) {
        auto listing = list_repairs(in.table, opts);
        out = {{"kind", listing.kind}, {"repairs", listing.repairs}};
      } else {
        json one;
        if (in.table.all_exact()) {
          auto r = repair_min_changes(in.table, {}, opts);
          if (!r) throw Error(ErrorCode::Infeasible, "no repair within the card limit");
          one = repair_to_json(*r);
        } else {
          one = interval_repair_to_json(mixed_repair(in.table, opts));
        }
        json j = {{"index", 0}};
        for (auto& [k, v] : one.items()) j[k] = v;
        out = {{"kind", table_kind(in.table)}, {"repairs", json::array({j})}};
      }
      emit(c, "repair", out);
      return out["repairs"].empty() ? kExitInfeasible : kExitOk;
    }
    if (complete->parsed()) {
      auto in = read_input(c, true);
      json out = enumerate ? enumeration_to_json(enumerate_completions(in.table, opts))
                           : completion_to_json(complete_missing(in.table, opts));
      emit(c, "complete", out);
      return kExitOk;
    }
    if (extract->parsed()) {
      auto in = read_input(c, true);
      SolverOptions o = opts;
      if (limit > 0) o.max_results = limit;
      json out = enumeration_to_json(enumerate_precise_extractions(in.table, o));
      if (!in.table.has_missing()) out["extractable"] = count_extractable(in.table);
      emit(c, "extract", out);
      return kExitOk;
    }
    if (sample->parsed()) {
      auto in = read_input(c, true);
      json arr = json::array();
      for (const auto& s : sample_continuous_tables(in.table, n, *seed)) arr.push_back(continuous_table_to_json(s));
      emit(c, "sample", json{{"seed", *seed}, {"samples", arr}});
      return kExitOk;
    }
    if (scale->parsed()) {
      auto in = read_input(c, false);
      std::optional<std::pair<Anchor, Anchor>> an;
      if (!anchors.empty()) an = parse_anchors(anchors);
      if (in.project && !in.criterion) {
        if (an) throw Error(ErrorCode::Validation, "--anchors needs a single criterion", "--anchors");
        emit(c, "scale", scales_to_json(build_scales(*in.project, opts)));
        return kExitOk;
      }
      Criterion crit;
      if (in.project) {
        crit = in.project->criteria[*in.criterion];
      } else {
        crit.id = "table";
        crit.table = in.table;
      }
      if (an) {
        crit.low = an->first;
        crit.high = an->second;
      }
      auto cs = build_criterion_scale(crit, opts);
      json out = scales_to_json({cs})[0];
      if (!in.project) out.erase("criterion");
      emit(c, "scale", out);
      return kExitOk;
    }
    if (capacity->parsed()) {
      auto in = read_input(c, false);
      const Project& p = need_project(in);
      auto cap = elicit_capacity(p);
      emit(c, "capacity", capacity_to_json(p, cap));
      return cap.valid() ? kExitOk : kExitInfeasible;
    }
    if (evaluate->parsed()) {
      auto in = read_input(c, false);
      emit(c, "evaluate", evaluation_to_json(evaluate_project(need_project(in), opts)));
      return kExitOk;
    }
    if (smaa->parsed()) {
      auto in = read_input(c, false);
      SmaaRequest req;
      req.mode = smaa_mode == "sample" ? SmaaMode::Sample : SmaaMode::Enumerate;
      req.seed = seed;
      req.samples = samples;
      req.limit = combo_limit;
      emit(c, "smaa", smaa_run_to_json(run_project_smaa(need_project(in), req, opts), req.mode));
      return kExitOk;
    }
    if (exporter->parsed()) {
      auto in = read_input(c, true);
      if (!graph && !bars) throw Error(ErrorCode::Validation, "pick --graph or --bars");
      if (graph) {
        std::cout << export_graph(in.table, graph_name);
        return kExitOk;
      }
      json arr = json::array();
      for (const auto& bar : export_bars(in.table))
        arr.push_back({{"pair", {bar.pair.p, bar.pair.q}}, {"length", bar.length}});
      emit(c, "export", json{{"bars", arr}});
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << error_body(e).dump() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << json{{"code", "Internal"}, {"message", e.what()}, {"location", nullptr}}.dump() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
