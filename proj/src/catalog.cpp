#include "wlplab/catalog.hpp"

#include <algorithm>
#include <map>

#include "wlplab/indpoly.hpp"

namespace wlplab::catalog {

namespace {

struct Listing {
  std::set<long> surjective_at_mode;      // fails from the mode to mode + 1
  std::set<long> injective_below_mode;    // fails from mode - 1 to the mode
};

// Transcribed from the per-degree failure listings of the classification proofs.
const std::map<Kind, Listing>& listings() {
  static const std::map<Kind, Listing> data{
      {Kind::Path, {{8, 11, 14, 15, 17}, {12, 16}}},
      {Kind::Cycle, {{12, 15, 18, 19}, {16, 20}}},
      {Kind::Ce, {{9, 12, 15, 16, 18, 19}, {13, 17, 20}}},
      {Kind::Pan, {{11, 14, 17, 18, 20}, {15, 19}}},
      {Kind::Tadpole3, {{2, 5, 8, 9, 11, 12, 14, 15, 16, 17}, {2, 6, 10, 13, 14, 17}}},
  };
  return data;
}

std::size_t family_mode(Kind k, long n) {
  switch (k) {
    case Kind::Path: return lambda(n);
    case Kind::Cycle: return rho(n);
    case Kind::Ce: return chi(n);
    case Kind::Pan: return zeta(n);
    case Kind::Tadpole3: return rho(n + 3);
  }
  return 0;
}

void check_domain(Kind k, long n) {
  if (n < min_n(k))
    throw NotTabulated(to_string(k) + " is defined for n >= " + std::to_string(min_n(k)) + ", got " +
                       std::to_string(n));
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Path: return "path";
    case Kind::Cycle: return "cycle";
    case Kind::Ce: return "ce";
    case Kind::Pan: return "pan";
    case Kind::Tadpole3: return "tadpole3";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  if (s == "path") return Kind::Path;
  if (s == "cycle") return Kind::Cycle;
  if (s == "ce") return Kind::Ce;
  if (s == "pan") return Kind::Pan;
  if (s == "tadpole3" || s == "tadpole") return Kind::Tadpole3;
  throw std::invalid_argument("unknown family kind '" + s + "'");
}

long min_n(Kind k) {
  switch (k) {
    case Kind::Path: return 1;
    case Kind::Cycle: return 3;
    case Kind::Ce: return 4;
    case Kind::Pan: return 3;
    case Kind::Tadpole3: return 1;
  }
  return 1;
}

long max_tabulated_n(Kind k) { return k == Kind::Path || k == Kind::Tadpole3 ? 17 : 20; }

FamilySpec family_spec(Kind k, long n) {
  switch (k) {
    case Kind::Path: return family(FamilyKind::Path, {n});
    case Kind::Cycle: return family(FamilyKind::Cycle, {n});
    case Kind::Ce: return family(FamilyKind::Ce, {n});
    case Kind::Pan: return family(FamilyKind::Pan, {n});
    case Kind::Tadpole3: return family(FamilyKind::Tadpole3, {3, n});
  }
  return {};
}

Graph family_graph(Kind k, long n) { return make_family(family_spec(k, n)); }

std::size_t lambda(long n) { return mode_formula(ModeKind::Path, n); }
std::size_t rho(long n) { return mode_formula(ModeKind::Cycle, n); }
std::size_t chi(long n) { return unimodality_report(closed_form(ClosedFormKind::Ce, n)).mode.value(); }
std::size_t zeta(long n) { return unimodality_report(closed_form(ClosedFormKind::Pan, n)).mode.value(); }

const std::set<long>& wlp_set(Kind k) {
  static const std::map<Kind, std::set<long>> sets{
      {Kind::Path, {1, 2, 3, 4, 5, 6, 7, 9, 10, 13}},
      {Kind::Cycle, {3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 17}},
      {Kind::Ce, {4, 5, 6, 7, 8, 10, 11, 14}},
      {Kind::Pan, {3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16}},
      {Kind::Tadpole3, {1, 3, 4, 7}},
  };
  return sets.at(k);
}

bool expected_wlp(Kind k, long n) {
  check_domain(k, n);
  return wlp_set(k).contains(n);
}

std::vector<ExpectedFailure> expected_failures(Kind k, long n) {
  check_domain(k, n);
  if (n > max_tabulated_n(k))
    throw NotTabulated(to_string(k) + ":" + std::to_string(n) + " is not tabulated (listings stop at n = " +
                       std::to_string(max_tabulated_n(k)) + ")");
  const auto& l = listings().at(k);
  std::vector<ExpectedFailure> out;
  const std::size_t mode = family_mode(k, n);
  if (l.surjective_at_mode.contains(n)) out.push_back({mode, FailureSense::Surjective});
  if (l.injective_below_mode.contains(n)) out.push_back({mode - 1, FailureSense::Injective});
  std::sort(out.begin(), out.end());
  return out;
}

ClassificationEntry entry(Kind k, long n) { return {k, n, expected_wlp(k, n), expected_failures(k, n)}; }

ExpectedFailure asymptotic_surjectivity_claim(Kind k, long n) {
  check_domain(k, n);
  switch (k) {
    case Kind::Path:
      if (n < 17) break;
      return {lambda(n), FailureSense::Surjective};
    case Kind::Cycle:
      if (n < 21) break;
      return {rho(n), FailureSense::Surjective};
    case Kind::Ce:
      if (n < 21) break;
      return {chi(n), FailureSense::Surjective};
    case Kind::Pan: {
      if (n < 21) break;
      const auto z = zeta(n);
      // second case with lambda_n = lambda_{n-3} + 1: injectivity below the mode
      if (z == chi(n + 1) + 1 && lambda(n) != lambda(n - 3)) return {z - 1, FailureSense::Injective};
      return {z, FailureSense::Surjective};
    }
    case Kind::Tadpole3:
      if (n < 18) break;
      return {rho(n + 3), FailureSense::Surjective};
  }
  throw NotTabulated("no asymptotic claim for " + to_string(k) + ":" + std::to_string(n));
}

std::optional<ExpectedFailure> path_injectivity_claim(long n) {
  if (n < 12 || lambda(n) != lambda(n - 1) + 1) return std::nullopt;
  return ExpectedFailure{lambda(n) - 1, FailureSense::Injective};
}

EntryCheck compare(const ClassificationEntry& e, const WlpVerdict& v) {
  EntryCheck c;
  c.verdict_matches = v.complete && v.has_wlp == e.expected_wlp;
  std::set<std::size_t> listed;
  for (const auto& f : e.expected_failures) listed.insert(f.degree);
  const auto deficient = v.deficient_degrees();
  std::set<std::size_t> computed(deficient.begin(), deficient.end());
  c.failures_match = listed == computed;
  for (const auto& f : e.expected_failures) {
    auto it = std::find_if(v.records.begin(), v.records.end(), [&](const auto& r) { return r.k == f.degree; });
    if (it == v.records.end()) {
      c.failures_match = false;
      continue;
    }
    const bool flag = f.sense == FailureSense::Surjective ? it->surjective_fail : it->injective_fail;
    if (!flag) c.failures_match = false;
  }
  std::string d = "deficient {";
  for (auto k : computed) d += (d.back() == '{' ? "" : ",") + std::to_string(k);
  d += "} expected {";
  bool first = true;
  for (const auto& f : e.expected_failures) {
    d += (first ? "" : ",") + std::to_string(f.degree) + (f.sense == FailureSense::Surjective ? "s" : "i");
    first = false;
  }
  d += "}";
  c.detail = d;
  return c;
}

const std::vector<ModeTableRow>& mode_table() {
  using M = std::optional<std::size_t>;
  const M x = std::nullopt;
  static const std::vector<ModeTableRow> rows{
      {"P_n", "lambda", {0, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4}},
      {"C_n", "rho", {x, x, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4}},
      {"CE_n", "chi", {x, x, x, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4}},
      {"Pan_n", "zeta", {x, x, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4}},
  };
  return rows;
}

nlohmann::json export_json() {
  nlohmann::json out;
  nlohmann::json families = nlohmann::json::array();
  for (Kind k : {Kind::Path, Kind::Cycle, Kind::Ce, Kind::Pan, Kind::Tadpole3}) {
    nlohmann::json f{{"kind", to_string(k)},
                     {"spec_example", wlplab::to_string(family_spec(k, min_n(k)))},
                     {"wlp_set", wlp_set(k)},
                     {"tabulated", {min_n(k), max_tabulated_n(k)}}};
    nlohmann::json entries = nlohmann::json::array();
    for (long n = min_n(k); n <= max_tabulated_n(k); ++n) {
      nlohmann::json fails = nlohmann::json::array();
      for (const auto& e : expected_failures(k, n))
        fails.push_back({{"degree", e.degree}, {"sense", wlplab::to_string(e.sense)}});
      entries.push_back({{"n", n}, {"expected_wlp", expected_wlp(k, n)}, {"expected_failures", fails}});
    }
    f["entries"] = std::move(entries);
    families.push_back(std::move(f));
  }
  out["families"] = std::move(families);
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : mode_table()) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& m : row.modes) cells.push_back(m ? nlohmann::json(*m) : nlohmann::json(nullptr));
    table.push_back({{"graph", row.graph}, {"mode", row.symbol}, {"n_from_1", cells}});
  }
  out["mode_table"] = std::move(table);
  return out;
}

}  // namespace wlplab::catalog
