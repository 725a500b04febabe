#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "wlplab/algebra.hpp"
#include "wlplab/rank.hpp"
#include "wlplab/rank_kernels.hpp"

using namespace wlplab;

namespace {

constexpr std::uint64_t kBigPrime = 2305843009213693951ull;  // 2^61 - 1

SparseMatrix zero(std::size_t r, std::size_t c) { return SparseMatrix(r, c); }

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("sparse matrix basics") {
    auto m = SparseMatrix::from_dense({{1, 0, 1}, {0, 1, 0}});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.nnz() == 3);
    CHECK(m.at(0, 2));
    CHECK_FALSE(m.at(1, 2));
    CHECK(m.column_counts() == std::vector<std::size_t>{1, 1, 1});
    CHECK(m.transposed().transposed() == m);
    CHECK(m.transposed().to_dense() == std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 0}});
    CHECK_THROWS(SparseMatrix(1, 2, {{2}}));
    CHECK_THROWS(SparseMatrix(1, 2, {{1, 1}}));
  }

  TEST_CASE("modular rank examples") {
    auto r = rank_mod_p(SparseMatrix::identity(3), 7);
    CHECK(r.rank == 3);
    CHECK(r.certified);
    r = rank_mod_p(zero(2, 5), 5);
    CHECK(r.rank == 0);
    CHECK(r.certified);
    CHECK(rank_mod_p(SparseMatrix::all_ones(4, 4), 5).rank == 1);
    CHECK_FALSE(rank_mod_p(SparseMatrix::all_ones(4, 4), 5, RankField::Rational).certified);
    CHECK_THROWS_AS(rank_mod_p(SparseMatrix::identity(2), 9), std::invalid_argument);
    CHECK_THROWS_AS(rank_mod_p(SparseMatrix::identity(2), (std::uint64_t{1} << 63) + 29), std::invalid_argument);
  }

  TEST_CASE("exact rank examples") {
    CHECK(rank_exact(SparseMatrix::from_dense({{1, 0, 1}})).rank == 1);
    CHECK(rank_exact(SparseMatrix::all_ones(2, 2)).rank == 1);
    CHECK(rank_exact(lefschetz_matrix(empty_graph(4), 1)).rank == 4);
    CHECK(rank_exact(zero(3, 0)).rank == 0);
  }

  TEST_CASE("certified rank examples") {
    std::mt19937_64 rng(1);
    SparseMatrix full;
    do {
      full = oracle::random_matrix(10, 12, 0.5, rng);
    } while (rank_mod_p(full, kBigPrime).rank != 10);
    auto r = rank_certified(full);
    CHECK(r.rank == 10);
    CHECK(r.certified);
    CHECK(r.method == RankMethod::Modular);

    r = rank_certified(SparseMatrix::all_ones(4, 4));
    CHECK(r.rank == 1);
    CHECK(r.certified);
    CHECK(r.method != RankMethod::Modular);

    RankOptions exact;
    exact.exact_only = true;
    r = rank_certified(SparseMatrix::all_ones(4, 4), exact);
    CHECK(r.method == RankMethod::ExactElimination);

    const auto m = lefschetz_matrix(path_graph(8), 2);
    r = rank_certified(m);
    CHECK(r.certified);
    CHECK(r.rank < m.rows());
  }

  TEST_CASE("serial, parallel and exact agree on 200 random matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = 1 + rng() % 30, cols = 1 + rng() % 30;
      const double density = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
      auto m = oracle::random_matrix(rows, cols, density, rng);
      const auto exact = rank_exact(m).rank;
      CHECK(exact == oracle::rank_q(m));
      CHECK(rank_mod_p(m, kBigPrime).rank == exact);
      CHECK(rank_certified(m).rank == exact);
      for (std::uint64_t p : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{7}, std::uint64_t{4294967291u}, kBigPrime}) {
        const auto packed = kernels::pack(m);
        const auto serial = kernels::rank_serial(packed, p);
        CHECK(kernels::rank_parallel(packed, p) == serial);
        CHECK(kernels::rank_parallel(packed, p, 2) == serial);
        CHECK(serial <= exact);
      }
    }
  }

  TEST_CASE("rank is invariant under permutations") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t rows = 2 + rng() % 20, cols = 2 + rng() % 20;
      auto m = oracle::random_matrix(rows, cols, 0.3, rng);
      std::vector<std::size_t> rp(rows), cp(cols);
      std::iota(rp.begin(), rp.end(), 0);
      std::iota(cp.begin(), cp.end(), 0);
      std::shuffle(rp.begin(), rp.end(), rng);
      std::shuffle(cp.begin(), cp.end(), rng);
      const auto pm = m.permuted(rp, cp);
      CHECK(pm.nnz() == m.nnz());
      CHECK(rank_exact(pm).rank == rank_exact(m).rank);
      CHECK(rank_mod_p(pm, 3).rank == rank_mod_p(m, 3).rank);
    }
  }

  TEST_CASE("kernel dimension oracle on at most 12 columns") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t rows = 1 + rng() % 14, cols = 1 + rng() % 12;
      auto m = oracle::random_matrix(rows, cols, 0.4, rng);
      const auto basis = oracle::kernel_q(m);
      KernelCertificate cert;
      cert.side = KernelCertificate::Side::Right;
      cert.rank = rank_exact(m).rank;
      cert.vectors = basis;
      CHECK(cert.rank + basis.size() == cols);
      CHECK(verify_certificate(m, cert));

      std::mt19937_64 prng(trial);
      auto built = kernel_certificate(m, prng);
      REQUIRE(built.has_value());
      CHECK(built->rank == cert.rank);
      CHECK(verify_certificate(m, *built));
    }
  }

  TEST_CASE("certificate checks reject bad vectors") {
    auto m = SparseMatrix::all_ones(2, 3);
    KernelCertificate cert;
    cert.rank = 1;
    cert.vectors = {{1, -1, 0}, {0, 1, -1}};
    CHECK(verify_certificate(m, cert));
    cert.vectors[1] = {0, 1, 1};
    CHECK_FALSE(verify_certificate(m, cert));
    cert.vectors = {{1, -1, 0}};
    CHECK_FALSE(verify_certificate(m, cert));
    cert.rank = 2;
    cert.vectors = {{0, 0, 0}};
    CHECK_FALSE(verify_certificate(m, cert));
  }

  TEST_CASE("rational reconstruction") {
    const mpz_class n = mpz_class(kBigPrime) * mpz_class(kBigPrime);
    mpz_class inv3;
    mpz_invert(inv3.get_mpz_t(), mpz_class(3).get_mpz_t(), n.get_mpz_t());
    mpz_class a = (-2 * inv3) % n;
    if (a < 0) a += n;
    auto q = rational_reconstruct(a, n);
    REQUIRE(q.has_value());
    CHECK(*q == mpq_class(-2, 3));
    CHECK(rational_reconstruct(mpz_class(5), n) == mpq_class(5));
  }

  TEST_CASE("modular helpers") {
    CHECK(kernels::is_prime(2));
    CHECK(kernels::is_prime(kBigPrime));
    CHECK_FALSE(kernels::is_prime(1));
    CHECK_FALSE(kernels::is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(kernels::mul_mod(kBigPrime - 1, kBigPrime - 1, kBigPrime) == 1);
    CHECK(kernels::pow_mod(3, kBigPrime - 1, kBigPrime) == 1);
    CHECK(kernels::mul_mod(kernels::inv_mod(12345, 1000003), 12345, 1000003) == 1);
    std::mt19937_64 rng(4);
    const auto p = random_prime(rng);
    CHECK(p >= (std::uint64_t{1} << 61));
    CHECK(p < (std::uint64_t{1} << 62));
    CHECK(kernels::is_prime(p));
  }
}
