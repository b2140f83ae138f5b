#include "text.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

namespace dcm::cli {
namespace {

std::string cell_text(const Cell& c) {
  if (c.is_exact()) return std::to_string(c.lo);
  if (c.is_interval()) return fmt::format("[{},{}]", c.lo, c.hi);
  return "?";
}

std::string level_name(const PairwiseTable& t, int k) {
  auto i = static_cast<std::size_t>(k - 1);
  if (i < t.labels.size() && !t.labels[i].empty()) return t.labels[i];
  return fmt::format("l{}", k);
}

void matrix(std::ostream& os, const PairwiseTable& t, const std::string& indent = "  ") {
  const int n = t.levels();
  std::vector<std::vector<std::string>> grid(n + 1, std::vector<std::string>(n + 1));
  for (int k = 1; k <= n; ++k) grid[0][k] = grid[k][0] = level_name(t, k);
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) grid[p][q] = p == q ? "-" : (p < q ? cell_text(t.at(p, q)) : "");
  std::vector<std::size_t> width(n + 1, 0);
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c) width[c] = std::max(width[c], grid[r][c].size());
  for (int r = 0; r <= n; ++r) {
    std::string line = indent;
    for (int c = 0; c <= n; ++c) {
      const auto& s = grid[r][c];
      line += c == 0 ? fmt::format("{:<{}}", s, width[c]) : fmt::format("  {:>{}}", s, width[c]);
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
}

void matrix(std::ostream& os, const json& tj, const std::string& indent = "  ") {
  matrix(os, table_from_json(tj), indent);
}

std::string pair_text(const json& pr) { return fmt::format("({},{})", pr[0].get<int>(), pr[1].get<int>()); }

std::string pairs_text(const json& arr) {
  std::string s;
  for (const auto& pr : arr) s += (s.empty() ? "" : " ") + pair_text(pr);
  return s.empty() ? "none" : s;
}

std::string num(double v, int prec = 4) { return fmt::format("{:.{}f}", v, prec); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void check(std::ostream& os, const json& r) {
  os << "kind: " << r["kind"].get<std::string>() << "\n";
  os << "consistent: " << yes_no(r["consistent"].get<bool>()) << "\n";
  if (r.contains("z")) {
    os << "minimal changes: " << r["z"].get<std::size_t>() << "\n";
    os << "cells to revise: " << pairs_text(r["modified"]) << "\n";
  }
  for (const auto& v : r["violations"]) {
    const auto& tr = v["triple"];
    int p = tr[0], k = tr[1], q = tr[2];
    os << fmt::format("  violated ({},{},{}): e{}{} + e{}{} + 1 = {} but e{}{} = {}\n", p, k, q, p, k, k,
                      q, v["lhs"].get<Cards>(), p, q, v["rhs"].get<Cards>());
  }
}

void repair_block(std::ostream& os, const json& r) {
  os << fmt::format("repair {}: z={} cells {}\n", r.value("index", 0), r["z"].get<std::size_t>(),
                    pairs_text(r["modified"]));
  if (r.contains("deltas")) {
    for (const auto& d : r["deltas"])
      os << fmt::format("  {} {:+d}\n", pair_text(d["pair"]), d["delta"].get<Cards>());
    matrix(os, r["table"]);
    return;
  }
  for (const auto& b : r["bounds"])
    os << fmt::format("  {} [{},{}] -> [{},{}]\n", pair_text(b["pair"]), b["from"][0].get<Cards>(),
                      b["from"][1].get<Cards>(), b["to"][0].get<Cards>(), b["to"][1].get<Cards>());
  os << "  adjusted table:\n";
  matrix(os, r["table"], "    ");
  os << "  witness:\n";
  matrix(os, r["witness"], "    ");
}

void repairs(std::ostream& os, const json& r) {
  os << "kind: " << r["kind"].get<std::string>() << "\n";
  os << "repairs: " << r["repairs"].size() << "\n";
  for (const auto& x : r["repairs"]) repair_block(os, x);
}

void enumeration(std::ostream& os, const json& r) {
  os << "tables: " << r["count"].get<std::size_t>();
  if (r.contains("extractable")) os << " (raw grid " << r["extractable"].get<std::uint64_t>() << ")";
  os << "\n";
  if (!r["exhaustive"].get<bool>()) os << "listing truncated\n";
  if (r["unbounded"].get<bool>())
    os << "unbounded family; free gaps capped at " << r["domain_bound"].get<Cards>() << "\n";
  std::size_t k = 0;
  for (const auto& t : r["tables"]) {
    std::string gaps;
    for (const auto& g : t["gaps"]) gaps += (gaps.empty() ? "" : ",") + std::to_string(g.get<Cards>());
    os << fmt::format("table {}: d=({})\n", k++, gaps);
    matrix(os, t["table"]);
  }
}

void completion(std::ostream& os, const json& r) {
  os << "minimal changes: " << r["z"].get<std::size_t>() << "\n";
  for (const auto& f : r["flagged"])
    os << fmt::format("  {} {:+d}\n", pair_text(f["pair"]), f["delta"].get<Cards>());
  matrix(os, r["table"]);
}

void samples(std::ostream& os, const json& r) {
  os << fmt::format("samples: {} seed: {}\n", r["samples"].size(), r["seed"].get<std::uint64_t>());
  std::size_t k = 0;
  for (const auto& s : r["samples"]) {
    std::string line;
    for (const auto& c : s["cells"])
      line += fmt::format(" e{}{}={}", c["p"].get<int>(), c["q"].get<int>(), num(c["values"][0].get<double>()));
    os << "sample " << k++ << ":" << line << "\n";
  }
}

void scale(std::ostream& os, const json& s) {
  if (s.contains("criterion"))
    os << fmt::format("criterion {} ({})\n", s["criterion"].get<std::string>(), s["source"].get<std::string>());
  os << "  alpha: " << num(s["alpha"].get<double>()) << "\n";
  const auto& u = s["utilities"];
  for (std::size_t k = 0; k < u.size(); ++k) {
    std::string coord;
    if (s.contains("coordinates")) coord = fmt::format(" at {}", s["coordinates"][k].get<double>());
    os << fmt::format("  level {}{}: {}\n", k + 1, coord, num(u[k].get<double>(), 3));
  }
}

void capacity(std::ostream& os, const json& r) {
  os << fmt::format("z: {}  ell: {}  alpha: {}\n", r["z"].get<double>(), r["ell"].get<double>(),
                    num(r["alpha"].get<double>()));
  os << fmt::format("{:<10}{:>10}{:>10}{:>10}{:>10}\n", "project", "w", "w_bar", "m", "mu");
  for (const auto& e : r["singletons"])
    os << fmt::format("{:<10}{:>10}{:>10}{:>10}{:>10}\n", e["criterion"].get<std::string>(),
                      num(e["w"].get<double>()), num(e["w_bar"].get<double>()), num(e["m"].get<double>()),
                      num(e["mu"].get<double>()));
  for (const auto& e : r["pairs"])
    os << fmt::format("{:<10}{:>10}{:>10}{:>10}{:>10}\n",
                      e["i"].get<std::string>() + "+" + e["j"].get<std::string>(), num(e["w"].get<double>()),
                      num(e["w_bar"].get<double>()), num(e["m"].get<double>()), num(e["mu"].get<double>()));
  os << "valid: " << yes_no(r["valid"].get<bool>()) << "\n";
  for (const auto& v : r["violations"]) os << "  " << v.dump() << "\n";
  for (const auto& s : r["sign_mismatches"])
    os << fmt::format("  sign mismatch {}+{}: expected {}, m={}\n", s["i"].get<std::string>(),
                      s["j"].get<std::string>(), s["hint"].get<std::string>(), num(s["m"].get<double>()));
}

void evaluation(std::ostream& os, const json& r) {
  for (const auto& a : r["alternatives"]) {
    std::string us;
    for (const auto& u : a["utilities"]) us += fmt::format("{:>9}", num(u.get<double>(), 3));
    os << fmt::format("{:<6}{}  value {:>9}  rank {}\n", a["id"].get<std::string>(), us,
                      num(a["value"].get<double>()), a["rank"].get<std::size_t>());
  }
  std::string order;
  for (const auto& id : r["ranking"]) order += (order.empty() ? "" : " > ") + id.get<std::string>();
  os << "ranking: " << order << "\n";
}

void percent_matrix(std::ostream& os, const json& alts, const json& m, const std::string& head,
                    bool by_alt_cols) {
  std::string line = fmt::format("{:<6}", head);
  for (std::size_t c = 0; c < m[0].size(); ++c)
    line += fmt::format("{:>8}", by_alt_cols ? alts[c].get<std::string>() : fmt::format("{}", c + 1));
  os << line << "\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    line = fmt::format("{:<6}", alts[r].get<std::string>());
    for (const auto& v : m[r]) line += fmt::format("{:>8}", num(v.get<double>(), 2));
    os << line << "\n";
  }
}

void smaa(std::ostream& os, const json& r) {
  os << fmt::format("combinations: {}{}\n", r["combination_count"].get<std::uint64_t>(),
                    r["sampled"].get<bool>() ? " (sampled)" : "");
  if (r.contains("seed")) os << "seed: " << r["seed"].get<std::uint64_t>() << "\n";
  os << "rank acceptability (%)\n";
  percent_matrix(os, r["alternatives"], r["b"], "", false);
  os << "pairwise winning (%)\n";
  percent_matrix(os, r["alternatives"], r["p"], "", true);
}

void bars(std::ostream& os, const json& r) {
  for (const auto& b : r["bars"])
    os << fmt::format("{} {:>4}  {}\n", pair_text(b["pair"]), b["length"].get<Cards>(),
                      std::string(static_cast<std::size_t>(b["length"].get<Cards>()), '#'));
}

}  // namespace

std::string render_text(const std::string& command, const json& r) {
  std::ostringstream os;
  if (command == "check") {
    check(os, r);
  } else if (command == "repair") {
    repairs(os, r);
  } else if (command == "complete") {
    if (r.contains("tables"))
      enumeration(os, r);
    else
      completion(os, r);
  } else if (command == "extract") {
    enumeration(os, r);
  } else if (command == "sample") {
    samples(os, r);
  } else if (command == "scale") {
    if (r.is_array())
      for (const auto& s : r) scale(os, s);
    else
      scale(os, r);
  } else if (command == "capacity") {
    capacity(os, r);
  } else if (command == "evaluate") {
    evaluation(os, r);
  } else if (command == "smaa") {
    smaa(os, r);
  } else if (command == "export") {
    bars(os, r);
  } else {
    os << r.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace dcm::cli
