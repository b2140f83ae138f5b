#include "dcm/pct.hpp"

#include <cmath>
#include <sstream>

namespace dcm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonExactCell: return "NonExactCell";
    case ErrorCode::NotConsistent: return "NotConsistent";
    case ErrorCode::DomainExceeded: return "DomainExceeded";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InconsistentTable: return "InconsistentTable";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadRatio: return "BadRatio";
    case ErrorCode::BadRanking: return "BadRanking";
    case ErrorCode::CapacityInvalid: return "CapacityInvalid";
    case ErrorCode::MonotonicityViolated: return "MonotonicityViolated";
    case ErrorCode::ComboExplosion: return "ComboExplosion";
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Validation: return "Validation";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::Conflict: return "Conflict";
  }
  return "Unknown";
}

std::string to_string(const Pair& pr) {
  return "(" + std::to_string(pr.p) + "," + std::to_string(pr.q) + ")";
}

Cell Cell::exact(Cards e) {
  if (e < 0) throw Error(ErrorCode::Validation, "card count must be nonnegative");
  return {Kind::Exact, e, e};
}

Cell Cell::interval(Cards lo, Cards hi) {
  if (lo < 0 || hi < lo)
    throw Error(ErrorCode::Validation, "interval requires 0 <= lo <= hi");
  return {Kind::Interval, lo, hi};
}

PairwiseTable::PairwiseTable(int t) : t_(t) {
  if (t < 2) throw Error(ErrorCode::Validation, "a table needs at least two levels");
  cells_.assign(static_cast<std::size_t>(t) * (t - 1) / 2, Cell::missing());
}

std::size_t PairwiseTable::index(int p, int q) const {
  if (p < 1 || q > t_ || p >= q)
    throw Error(ErrorCode::Validation, "pair outside the upper triangle",
                to_string(Pair{p, q}));
  auto pp = static_cast<std::size_t>(p - 1);
  return pp * t_ - pp * (pp + 1) / 2 + static_cast<std::size_t>(q - p - 1);
}

Pair PairwiseTable::pair_at(std::size_t idx) const {
  int p = 1;
  std::size_t row = static_cast<std::size_t>(t_ - 1);
  while (idx >= row) {
    idx -= row;
    --row;
    ++p;
  }
  return {p, p + 1 + static_cast<int>(idx)};
}

std::vector<Pair> PairwiseTable::pairs() const {
  std::vector<Pair> out;
  out.reserve(cells_.size());
  for (int p = 1; p < t_; ++p)
    for (int q = p + 1; q <= t_; ++q) out.push_back({p, q});
  return out;
}

void PairwiseTable::set(int p, int q, Cell c) { cells_[index(p, q)] = c; }

Cards PairwiseTable::exact(int p, int q) const {
  const Cell& c = at(p, q);
  if (!c.is_exact())
    throw Error(ErrorCode::NonExactCell, "cell is not exact", to_string(Pair{p, q}));
  return c.lo;
}

bool PairwiseTable::all_exact() const {
  for (const auto& c : cells_)
    if (!c.is_exact()) return false;
  return true;
}

bool PairwiseTable::has_missing() const {
  for (const auto& c : cells_)
    if (c.is_missing()) return true;
  return false;
}

bool PairwiseTable::has_interval() const {
  for (const auto& c : cells_)
    if (c.is_interval()) return true;
  return false;
}

ContinuousTable::ContinuousTable(int t) : t_(t) {
  if (t < 2) throw Error(ErrorCode::Validation, "a table needs at least two levels");
  values_.assign(static_cast<std::size_t>(t) * (t - 1) / 2, 0.0);
}

namespace {
std::size_t tri_index(int t, int p, int q) {
  if (p < 1 || q > t || p >= q)
    throw Error(ErrorCode::Validation, "pair outside the upper triangle",
                to_string(Pair{p, q}));
  auto pp = static_cast<std::size_t>(p - 1);
  return pp * t - pp * (pp + 1) / 2 + static_cast<std::size_t>(q - p - 1);
}

void require_all_exact(const PairwiseTable& tbl) {
  for (std::size_t i = 0; i < tbl.cell_count(); ++i)
    if (!tbl.at(i).is_exact())
      throw Error(ErrorCode::NonExactCell, "cell is not exact", to_string(tbl.pair_at(i)));
}
}  // namespace

double ContinuousTable::at(int p, int q) const { return values_[tri_index(t_, p, q)]; }
void ContinuousTable::set(int p, int q, double v) { values_[tri_index(t_, p, q)] = v; }

Cards cards_between(const GapVector& d, int p, int q) {
  Cards sum = 0;
  for (int r = p; r < q; ++r) sum += d[static_cast<std::size_t>(r - 1)] + 1;
  return sum - 1;
}

PairwiseTable table_from_gaps(const GapVector& d) {
  for (Cards v : d)
    if (v < 0) throw Error(ErrorCode::Validation, "gap vector entries must be nonnegative");
  const int t = static_cast<int>(d.size()) + 1;
  PairwiseTable tbl(t);
  for (int p = 1; p < t; ++p) {
    Cards acc = -1;
    for (int q = p + 1; q <= t; ++q) {
      acc += d[static_cast<std::size_t>(q - 2)] + 1;
      tbl.set(p, q, Cell::exact(acc));
    }
  }
  return tbl;
}

PairwiseTable complete_from_consecutive(const GapVector& consecutive) {
  return table_from_gaps(consecutive);
}

std::vector<Violation> check_consistency(const PairwiseTable& tbl) {
  require_all_exact(tbl);
  std::vector<Violation> out;
  const int t = tbl.levels();
  for (int p = 1; p <= t - 2; ++p)
    for (int k = p + 1; k <= t - 1; ++k)
      for (int q = k + 1; q <= t; ++q) {
        Cards lhs = tbl.at(p, k).lo + tbl.at(k, q).lo + 1;
        Cards rhs = tbl.at(p, q).lo;
        if (lhs != rhs) out.push_back({p, k, q, lhs, rhs});
      }
  return out;
}

std::optional<GapVector> gaps_from_table(const PairwiseTable& tbl) {
  require_all_exact(tbl);
  GapVector d;
  for (int r = 1; r < tbl.levels(); ++r) d.push_back(tbl.at(r, r + 1).lo);
  if (!(table_from_gaps(d) == tbl)) return std::nullopt;
  return d;
}

GapVector gaps_or_throw(const PairwiseTable& tbl) {
  auto d = gaps_from_table(tbl);
  if (!d) {
    auto v = check_consistency(tbl);
    std::string loc = v.empty() ? std::string{}
                                : "(" + std::to_string(v[0].p) + "," + std::to_string(v[0].k) +
                                      "," + std::to_string(v[0].q) + ")";
    throw Error(ErrorCode::NotConsistent, "table violates the consistency condition", loc);
  }
  return *d;
}

double consistency_residual(const ContinuousTable& tbl) {
  double worst = 0.0;
  const int t = tbl.levels();
  for (int p = 1; p <= t - 2; ++p)
    for (int k = p + 1; k <= t - 1; ++k)
      for (int q = k + 1; q <= t; ++q)
        worst = std::max(worst, std::fabs(tbl.at(p, k) + tbl.at(k, q) + 1.0 - tbl.at(p, q)));
  return worst;
}

ContinuousTable to_continuous(const PairwiseTable& tbl) {
  require_all_exact(tbl);
  ContinuousTable out(tbl.levels());
  for (const Pair& pr : tbl.pairs())
    out.set(pr.p, pr.q, static_cast<double>(tbl.at(pr.p, pr.q).lo));
  return out;
}

std::string export_graph(const PairwiseTable& tbl, const std::string& name) {
  require_all_exact(tbl);
  auto label = [&](int k) {
    auto i = static_cast<std::size_t>(k - 1);
    return i < tbl.labels.size() && !tbl.labels[i].empty() ? tbl.labels[i]
                                                           : "l" + std::to_string(k);
  };
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  for (int k = 1; k <= tbl.levels(); ++k)
    os << "  n" << k << " [label=" << quote(label(k)) << "];\n";
  for (const Pair& pr : tbl.pairs())
    os << "  n" << pr.p << " -> n" << pr.q << " [label=\"" << tbl.at(pr.p, pr.q).lo << "\"];\n";
  os << "}\n";
  return os.str();
}

std::vector<Bar> export_bars(const PairwiseTable& tbl) {
  require_all_exact(tbl);
  std::vector<Bar> out;
  for (const Pair& pr : tbl.pairs()) out.push_back({pr, tbl.at(pr.p, pr.q).lo + 1});
  return out;
}

void validate_levels(const PairwiseTable& tbl) {
  const auto t = static_cast<std::size_t>(tbl.levels());
  if (!tbl.labels.empty() && tbl.labels.size() != t)
    throw Error(ErrorCode::Validation, "expected one label per level", "/levels");
  if (tbl.coordinates.empty()) return;
  if (tbl.coordinates.size() != t)
    throw Error(ErrorCode::Validation, "expected one coordinate per level", "/levels");
  const auto& c = tbl.coordinates;
  bool inc = true, dec = true;
  for (std::size_t k = 1; k < t; ++k) {
    if (!(c[k] > c[k - 1])) inc = false;
    if (!(c[k] < c[k - 1])) dec = false;
  }
  if (!inc && !dec)
    throw Error(ErrorCode::Validation, "level coordinates must be strictly monotone",
                "/levels");
}

}  // namespace dcm
