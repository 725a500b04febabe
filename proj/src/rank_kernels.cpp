#include "wlplab/rank_kernels.hpp"

#include <omp.h>

#include <stdexcept>
#include <utility>

namespace wlplab::kernels {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 128-bit values
  __int128 t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("value not invertible modulo p");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

DenseModMatrix pack(const SparseMatrix& m) {
  DenseModMatrix a{m.rows(), m.cols(), std::vector<std::uint64_t>(m.rows() * m.cols(), 0)};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto j : m.row(i)) a(i, j) = 1;
  return a;
}

std::size_t rank_serial(DenseModMatrix a, std::uint64_t p) {
  for (auto& x : a.data) x %= p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t piv = r;
    while (piv < a.rows && a(piv, c) == 0) ++piv;
    if (piv == a.rows) continue;
    for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(r, j), a(piv, j));
    const std::uint64_t inv = inv_mod(a(r, c), p);
    for (std::size_t i = r + 1; i < a.rows; ++i) {
      const std::uint64_t f = mul_mod(a(i, c), inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < a.cols; ++j) {
        const std::uint64_t sub = mul_mod(f, a(r, j), p);
        a(i, j) = a(i, j) >= sub ? a(i, j) - sub : a(i, j) + p - sub;
      }
    }
    ++r;
  }
  return r;
}

namespace {

/// Montgomery arithmetic with R = 2^64 for odd p < 2^63.
class Montgomery {
 public:
  explicit Montgomery(std::uint64_t p) : p_(p) {
    std::uint64_t inv = p;  // Newton iteration for p^-1 mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    const std::uint64_t r1 = static_cast<std::uint64_t>((static_cast<u128>(1) << 64) % p);
    r2_ = static_cast<std::uint64_t>(static_cast<u128>(r1) * r1 % p);
  }
  std::uint64_t reduce(u128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
    std::uint64_t r = static_cast<std::uint64_t>((t + static_cast<u128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(static_cast<u128>(a) * b); }
  std::uint64_t to_rep(std::uint64_t x) const { return mul(x % p_, r2_); }
  std::uint64_t from_rep(std::uint64_t x) const { return reduce(x); }
  std::uint64_t inv(std::uint64_t x) const { return to_rep(inv_mod(from_rep(x), p_)); }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t p() const { return p_; }

 private:
  std::uint64_t p_, neg_inv_, r2_;
};

/// Plain residues for p < 2^32, where the product fits in 64 bits.
class SmallMod {
 public:
  explicit SmallMod(std::uint64_t p) : p_(p) {}
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t to_rep(std::uint64_t x) const { return x % p_; }
  std::uint64_t from_rep(std::uint64_t x) const { return x; }
  std::uint64_t inv(std::uint64_t x) const { return inv_mod(x, p_); }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t p() const { return p_; }

 private:
  std::uint64_t p_;
};

// Below this many multiply-adds per pivot step the OpenMP fork costs more
// than it saves.
constexpr std::size_t kParallelThreshold = 1 << 15;

template <class Arith>
std::size_t eliminate(const Arith& ar, DenseModMatrix& a, bool reduce_above, std::vector<std::size_t>* pivots,
                      int threads) {
  for (auto& x : a.data) x = ar.to_rep(x);
  const std::size_t rows = a.rows, cols = a.cols;
  std::vector<std::uint32_t> nz;
  nz.reserve(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(r, j), a(piv, j));
    if (reduce_above) {
      // earlier columns of the pivot row are already zero
      const std::uint64_t inv = ar.inv(a(r, c));
      for (std::size_t j = c; j < cols; ++j)
        if (a(r, j)) a(r, j) = ar.mul(a(r, j), inv);
    }
    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (a(r, j)) nz.push_back(static_cast<std::uint32_t>(j));
    const std::uint64_t pivot_inv = reduce_above ? 0 : ar.inv(a(r, c));
    const std::size_t first = reduce_above ? 0 : r + 1;
    const std::size_t span = rows - first;
    const std::uint64_t* prow = &a.data[r * cols];
    const bool go_parallel = span * nz.size() >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (go_parallel) num_threads(threads > 0 ? threads : omp_get_max_threads())
    for (std::size_t i = first; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t* row = &a.data[i * cols];
      if (row[c] == 0) continue;
      const std::uint64_t f = reduce_above ? row[c] : ar.mul(row[c], pivot_inv);
      for (auto j : nz) row[j] = ar.sub(row[j], ar.mul(f, prow[j]));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

template <class Fn>
auto with_arith(std::uint64_t p, Fn&& fn) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  if (p < (std::uint64_t{1} << 32)) return fn(SmallMod(p));
  if ((p & 1) == 0 || p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("large modulus must be odd and < 2^63");
  return fn(Montgomery(p));
}

}  // namespace

std::size_t rank_parallel(DenseModMatrix a, std::uint64_t p, int threads) {
  return with_arith(p, [&](const auto& ar) { return eliminate(ar, a, false, nullptr, threads); });
}

RrefResult rref(DenseModMatrix a, std::uint64_t p, int threads) {
  return with_arith(p, [&](const auto& ar) {
    RrefResult out;
    out.rank = eliminate(ar, a, true, &out.pivot_cols, threads);
    for (auto& x : a.data) x = ar.from_rep(x);
    out.reduced = std::move(a);
    return out;
  });
}

std::vector<std::vector<std::uint64_t>> kernel_basis(const RrefResult& r, std::uint64_t p) {
  const auto cols = r.reduced.cols;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
      const auto x = r.reduced(k, f);
      v[r.pivot_cols[k]] = x == 0 ? 0 : p - x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wlplab::kernels
