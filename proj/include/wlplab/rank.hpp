#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wlplab/sparse_matrix.hpp"

namespace wlplab {

enum class RankMethod { Modular, ExactElimination, KernelCertificate };

std::string to_string(RankMethod m);

struct RankResult {
  std::size_t rank = 0;
  bool certified = false;
  RankMethod method = RankMethod::Modular;
};

/// Which rank a modular computation is asked for.
enum class RankField {
  Rational,    ///< rank over Q; a modular rank only certifies when it is maximal
  PrimeField,  ///< rank over GF(p) itself; always certified
};

/// Rank over GF(p).  Throws std::invalid_argument if p is not a prime < 2^63.
RankResult rank_mod_p(const SparseMatrix& m, std::uint64_t p, RankField field = RankField::PrimeField,
                      int threads = 0);

/// Rank over Q by fraction-free (Bareiss) elimination on GMP integers.
/// Rows are pre-sorted by increasing support size; pivots are the first
/// nonzero entry in row order within each column.
RankResult rank_exact(const SparseMatrix& m);

struct RankOptions {
  std::uint64_t seed = 0x5eed;
  int threads = 0;
  /// Primes combined by CRT before a kernel certificate is abandoned.
  std::size_t max_certificate_primes = 12;
  /// Skip the kernel certificate and go straight to Bareiss.
  bool exact_only = false;
};

/// Certified rank over Q: a maximal modular rank certifies itself; a
/// deficient one is confirmed by exactly verified integer kernel vectors,
/// falling back to rank_exact.
RankResult rank_certified(const SparseMatrix& m, const RankOptions& options = {});

/// Uniform random prime in [2^61, 2^62).
std::uint64_t random_prime(std::mt19937_64& rng);

/// Integer vectors certifying rank(m) <= r over Q.  The vectors lie in the
/// right kernel of m (side == Right) or of m^T (side == Left) and are
/// linearly independent by construction.
struct KernelCertificate {
  enum class Side { Right, Left } side = Side::Right;
  std::size_t rank = 0;
  std::vector<std::vector<mpz_class>> vectors;
};

/// Builds a certificate from residues modulo several random primes with CRT
/// and rational reconstruction.  Returns nullopt if verification did not
/// succeed within the prime budget.
std::optional<KernelCertificate> kernel_certificate(const SparseMatrix& m, std::mt19937_64& rng,
                                                    std::size_t max_primes = 12, int threads = 0);

/// Exact check that every certificate vector is annihilated by m.
bool verify_certificate(const SparseMatrix& m, const KernelCertificate& cert);

/// Rational reconstruction of a mod n with |num|, den <= sqrt(n/2).
std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& n);

}  // namespace wlplab
