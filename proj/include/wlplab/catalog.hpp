#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wlplab/graph.hpp"
#include "wlplab/spec_parser.hpp"
#include "wlplab/wlp.hpp"

namespace wlplab::catalog {

enum class Kind { Path, Cycle, Ce, Pan, Tadpole3 };

std::string to_string(Kind k);
Kind parse_kind(const std::string& s);
/// Smallest n for which the family is defined.
long min_n(Kind k);
/// Largest n covered by the explicit per-degree failure listings.
long max_tabulated_n(Kind k);
FamilySpec family_spec(Kind k, long n);
Graph family_graph(Kind k, long n);

/// Raised for n outside a family's domain or outside a tabulated range.
class NotTabulated : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Modes of the independence polynomials: lambda (paths), rho (cycles),
// chi (CE graphs), zeta (pans).
std::size_t lambda(long n);
std::size_t rho(long n);
std::size_t chi(long n);
std::size_t zeta(long n);

/// Finite set of n for which A(G) has the WLP.
const std::set<long>& wlp_set(Kind k);
bool expected_wlp(Kind k, long n);

struct ExpectedFailure {
  std::size_t degree = 0;
  FailureSense sense = FailureSense::Surjective;
  bool operator==(const ExpectedFailure&) const = default;
  auto operator<=>(const ExpectedFailure&) const = default;
};

struct ClassificationEntry {
  Kind kind = Kind::Path;
  long n = 0;
  bool expected_wlp = false;
  std::vector<ExpectedFailure> expected_failures;
};

/// Failures stated for tabulated n, with degrees resolved to integers.
/// Throws NotTabulated outside the listed range.
std::vector<ExpectedFailure> expected_failures(Kind k, long n);
ClassificationEntry entry(Kind k, long n);

/// Predicted failure for n beyond the tabulated range (path n >= 17,
/// cycle/ce/pan n >= 21).  Throws NotTabulated below the threshold.
ExpectedFailure asymptotic_surjectivity_claim(Kind k, long n);

/// Injectivity failure of A(P_n) at lambda_n - 1 whenever n >= 12 and
/// lambda_n = lambda_{n-1} + 1.  nullopt when the hypothesis fails.
std::optional<ExpectedFailure> path_injectivity_claim(long n);

/// Comparison of a verdict with the catalog entry.
struct EntryCheck {
  bool verdict_matches = false;
  bool failures_match = false;
  std::string detail;
  bool ok() const { return verdict_matches && failures_match; }
};

/// The deficient degrees of `v` must be exactly the listed degrees, and each
/// listed (degree, sense) must carry the corresponding failure flag.
EntryCheck compare(const ClassificationEntry& e, const WlpVerdict& v);

/// One row of the mode table, n = 1..13 with nullopt for undefined cells.
struct ModeTableRow {
  std::string graph;
  std::string symbol;
  std::vector<std::optional<std::size_t>> modes;
};
const std::vector<ModeTableRow>& mode_table();

nlohmann::json export_json();

}  // namespace wlplab::catalog
