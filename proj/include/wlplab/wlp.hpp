#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wlplab/graph.hpp"
#include "wlplab/polynomial.hpp"
#include "wlplab/rank.hpp"

namespace wlplab {

enum class CertifyMode {
  Auto,   ///< modular, escalating to a kernel certificate or Bareiss on deficiency
  Exact,  ///< Bareiss elimination for every map
  Fast,   ///< one modular rank; deficiencies are reported uncertified
};

std::string to_string(CertifyMode m);
CertifyMode parse_certify_mode(const std::string& text);

struct WlpOptions {
  /// 0 for characteristic zero, otherwise a prime.
  std::uint64_t characteristic = 0;
  CertifyMode certify = CertifyMode::Auto;
  std::uint64_t seed = 0x5eed;
  /// Largest basis (per degree) for which a characteristic-0 rank
  /// deficiency is certified.
  std::size_t max_basis = 10000;
  bool override_budget = false;
  int threads = 0;
};

/// Rank of multiplication by the sum of the variables from degree k to k+1.
struct DegreeRankRecord {
  std::size_t k = 0;
  std::size_t h_k = 0;
  std::size_t h_k1 = 0;
  std::size_t rank = 0;
  bool injective_fail = false;   // rank < h_k
  bool surjective_fail = false;  // rank < h_k1
  bool certified = true;
  bool budget_exceeded = false;
  RankMethod method = RankMethod::Modular;

  bool max_rank() const { return rank == std::min(h_k, h_k1); }
};

struct WlpVerdict {
  std::string spec;
  std::uint64_t characteristic = 0;
  bool has_wlp = false;
  /// False when some degree hit the basis budget; has_wlp is then false
  /// but not a proven failure.
  bool complete = true;
  std::size_t socle_degree = 0;
  /// k = 0..D, the last entry being the map into the zero space.
  std::vector<DegreeRankRecord> records;

  /// Degrees whose map is not of maximal rank.
  std::vector<std::size_t> deficient_degrees() const;
  nlohmann::json to_json() const;
  static WlpVerdict from_json(const nlohmann::json& j);
};

DegreeRankRecord degree_rank(const Graph& g, std::size_t k, const WlpOptions& options = {});

WlpVerdict wlp_check(const Graph& g, const WlpOptions& options = {}, const std::string& spec = "");

/// Hilbert series of A/lA: coefficient k is h_k - rank(k-1 -> k).
IntPolynomial hilbert_quotient(const Graph& g, const WlpOptions& options = {});

enum class FailureSense { Surjective, Injective };
std::string to_string(FailureSense s);

struct TensorWitness {
  bool hypothesis_holds = false;  // both factor maps fail in the given sense
  bool confirmed = false;         // the union fails at the predicted degree
  /// Vacuously true when the hypothesis is not met.
  bool holds() const { return !hypothesis_holds || confirmed; }
};

/// Checks the tensor-product failure propagation on A(g1 + g2) = A(g1) (x) A(g2):
/// surjective failures at i and j force one at i+j+1, injective ones at i+j.
TensorWitness tensor_failure_witness(const Graph& g1, std::size_t i, const Graph& g2, std::size_t j,
                                     FailureSense sense, const WlpOptions& options = {});

}  // namespace wlplab
