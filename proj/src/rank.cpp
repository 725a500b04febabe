#include "wlplab/rank.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wlplab/rank_kernels.hpp"

namespace wlplab {

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::Modular: return "modular";
    case RankMethod::ExactElimination: return "exact-elimination";
    case RankMethod::KernelCertificate: return "kernel-certificate";
  }
  return "unknown";
}

RankResult rank_mod_p(const SparseMatrix& m, std::uint64_t p, RankField field, int threads) {
  if (!kernels::is_prime(p) || p >= (std::uint64_t{1} << 63))
    throw std::invalid_argument("rank_mod_p: " + std::to_string(p) + " is not a prime below 2^63");
  RankResult out;
  out.method = RankMethod::Modular;
  out.rank = (m.rows() == 0 || m.cols() == 0) ? 0 : kernels::rank_parallel(kernels::pack(m), p, threads);
  out.certified = field == RankField::PrimeField || out.rank == std::min(m.rows(), m.cols());
  return out;
}

RankResult rank_exact(const SparseMatrix& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (auto j : m.row(order[i])) a[i][j] = 1;

  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const mpz_class& pv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = pv * a[i][j] - f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pv;
    ++r;
  }
  return {r, true, RankMethod::ExactElimination};
}

std::uint64_t random_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 61, (std::uint64_t{1} << 62) - 1);
  while (true) {
    auto candidate = dist(rng) | 1;
    if (kernels::is_prime(candidate)) return candidate;
  }
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& n) {
  mpz_class bound = n / 2;
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  mpz_class r0 = n, r1 = a % n;
  if (r1 < 0) r1 += n;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g = gcd(r1, t1);
  if (g != 1) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

bool verify_certificate(const SparseMatrix& m, const KernelCertificate& cert) {
  const SparseMatrix a = cert.side == KernelCertificate::Side::Left ? m.transposed() : m;
  if (cert.rank + cert.vectors.size() != a.cols()) return false;
  for (const auto& v : cert.vectors) {
    if (v.size() != a.cols()) return false;
    if (std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; })) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      mpz_class s = 0;
      for (auto j : a.row(i)) s += v[j];
      if (s != 0) return false;
    }
  }
  return true;
}

std::optional<KernelCertificate> kernel_certificate(const SparseMatrix& m, std::mt19937_64& rng,
                                                    std::size_t max_primes, int threads) {
  if (m.rows() == 0 || m.cols() == 0) {
    // every standard basis vector of the nonempty side is a kernel vector
    KernelCertificate cert;
    cert.side = m.cols() == 0 ? KernelCertificate::Side::Left : KernelCertificate::Side::Right;
    const std::size_t dim = m.cols() == 0 ? m.rows() : m.cols();
    for (std::size_t k = 0; k < dim; ++k) {
      std::vector<mpz_class> v(dim, 0);
      v[k] = 1;
      cert.vectors.push_back(std::move(v));
    }
    return cert;
  }
  // the smaller dimension carries the smaller nullity
  KernelCertificate cert;
  cert.side = m.rows() < m.cols() ? KernelCertificate::Side::Left : KernelCertificate::Side::Right;
  const SparseMatrix a = cert.side == KernelCertificate::Side::Left ? m.transposed() : m;
  const auto packed = kernels::pack(a);

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  std::vector<std::vector<mpz_class>> residues;
  mpz_class modulus = 1;

  for (std::size_t attempt = 0; attempt < max_primes; ++attempt) {
    const std::uint64_t p = random_prime(rng);
    auto red = kernels::rref(packed, p, threads);
    if (attempt == 0 || red.pivot_cols != pivots) {
      // Q's rank profile is lexicographically minimal among all primes
      const bool better = attempt == 0 || red.rank > rank || (red.rank == rank && red.pivot_cols < pivots);
      if (!better) continue;
      pivots = red.pivot_cols;
      rank = red.rank;
      residues.clear();
      modulus = 1;
    }
    auto basis = kernels::kernel_basis(red, p);
    if (residues.empty()) {
      residues.assign(basis.size(), std::vector<mpz_class>(a.cols(), 0));
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t j = 0; j < a.cols(); ++j) residues[k][j] = static_cast<unsigned long>(basis[k][j]);
      modulus = static_cast<unsigned long>(p);
    } else {
      const mpz_class mp = static_cast<unsigned long>(p);
      mpz_class m_mod_p = modulus % mp;
      const std::uint64_t inv = kernels::inv_mod(m_mod_p.get_ui(), p);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          mpz_class& x = residues[k][j];
          mpz_class old_mod = x % mp;
          std::uint64_t diff = basis[k][j] >= old_mod.get_ui() ? basis[k][j] - old_mod.get_ui()
                                                               : basis[k][j] + p - old_mod.get_ui();
          x += modulus * static_cast<unsigned long>(kernels::mul_mod(diff, inv, p));
        }
      }
      modulus *= mp;
    }

    std::vector<std::vector<mpz_class>> ints;
    bool ok = true;
    for (const auto& res : residues) {
      std::vector<mpq_class> q;
      q.reserve(res.size());
      for (const auto& x : res) {
        auto v = rational_reconstruct(x, modulus);
        if (!v) {
          ok = false;
          break;
        }
        q.push_back(*v);
      }
      if (!ok) break;
      mpz_class den = 1;
      for (const auto& x : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      std::vector<mpz_class> v(q.size());
      for (std::size_t j = 0; j < q.size(); ++j) v[j] = q[j].get_num() * (den / q[j].get_den());
      ints.push_back(std::move(v));
    }
    if (!ok) continue;

    std::vector<std::size_t> free;
    for (std::size_t j = 0, k = 0; j < a.cols(); ++j) {
      if (k < pivots.size() && pivots[k] == j) {
        ++k;
      } else {
        free.push_back(j);
      }
    }
    cert.rank = rank;
    cert.vectors = std::move(ints);
    if (verify_certificate(m, cert) && cert.vectors.size() == free.size()) {
      // vector k is nonzero on free column k and zero on the other free
      // columns, so the vectors are independent
      bool independent = true;
      for (std::size_t k = 0; k < cert.vectors.size() && independent; ++k)
        for (std::size_t l = 0; l < free.size(); ++l)
          if ((cert.vectors[k][free[l]] != 0) != (k == l)) independent = false;
      if (independent) return cert;
    }
  }
  return std::nullopt;
}

RankResult rank_certified(const SparseMatrix& m, const RankOptions& options) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return {0, true, RankMethod::Modular};
  std::mt19937_64 rng(options.seed);
  const std::uint64_t p = random_prime(rng);
  const std::size_t r = kernels::rank_parallel(kernels::pack(m), p, options.threads);
  if (r == full) return {r, true, RankMethod::Modular};
  if (!options.exact_only) {
    if (auto cert = kernel_certificate(m, rng, options.max_certificate_primes, options.threads))
      return {cert->rank, true, RankMethod::KernelCertificate};
  }
  return rank_exact(m);
}

}  // namespace wlplab
