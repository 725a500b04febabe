#pragma once

// Dense row-reduction kernels over GF(p).
//
// Two implementations are kept side by side: a plain serial reference that
// reduces every product with 128-bit division, and the production kernel
// (Montgomery arithmetic, sparse pivot rows, OpenMP over the rows being
// updated).  Tests and the benchmark compare them.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wlplab/sparse_matrix.hpp"

namespace wlplab::kernels {

/// Row-major dense matrix of residues in [0, p).
struct DenseModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> data;

  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

DenseModMatrix pack(const SparseMatrix& m);

/// Reference: textbook elimination, one thread.
std::size_t rank_serial(DenseModMatrix a, std::uint64_t p);

/// Production kernel; `threads` <= 0 leaves the OpenMP default.
std::size_t rank_parallel(DenseModMatrix a, std::uint64_t p, int threads = 0);

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  /// Reduced row echelon form (rows 0..rank-1 meaningful), residues in [0, p).
  DenseModMatrix reduced;
};

/// Gauss-Jordan reduction with first-nonzero pivoting in column order.
RrefResult rref(DenseModMatrix a, std::uint64_t p, int threads = 0);

/// Normalised right-kernel basis from an RREF: one vector per free column f,
/// with entry 1 at f, 0 at the other free columns and -R[j][f] at pivot j.
std::vector<std::vector<std::uint64_t>> kernel_basis(const RrefResult& r, std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace wlplab::kernels
