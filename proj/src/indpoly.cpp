#include "wlplab/indpoly.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace wlplab {

namespace {

void enumerate(const Graph& g, std::size_t size, const VertexSet& candidates,
               std::vector<unsigned long long>& counts) {
  if (counts.size() <= size) counts.resize(size + 1, 0);
  ++counts[size];
  for (auto v = candidates.first(); v < candidates.size(); v = candidates.next(v + 1)) {
    // only extend with larger labels so each set is visited once
    VertexSet next = candidates;
    for (auto u = next.first(); u <= v && u < next.size(); u = next.next(u + 1)) next.reset(u);
    next.subtract(g.row(v));
    enumerate(g, size + 1, next, counts);
  }
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const {
    std::size_t h = k.size();
    for (auto w : k) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

class Recurrence {
 public:
  explicit Recurrence(const Graph& g) : g_(g) {}

  IntPolynomial run(const VertexSet& alive) {
    if (alive.none()) return IntPolynomial::one();
    auto comps = components(alive);
    if (comps.size() > 1) {
      IntPolynomial out = IntPolynomial::one();
      for (const auto& c : comps) out = out * connected(c);
      return out;
    }
    return connected(alive);
  }

 private:
  std::vector<VertexSet> components(const VertexSet& alive) const {
    std::vector<VertexSet> out;
    VertexSet rest = alive;
    while (rest.any()) {
      VertexSet comp(alive.size());
      VertexSet frontier(alive.size());
      frontier.set(rest.first());
      while (frontier.any()) {
        comp |= frontier;
        VertexSet grown(alive.size());
        for (auto v = frontier.first(); v < frontier.size(); v = frontier.next(v + 1)) grown |= g_.row(v);
        grown &= alive;
        grown.subtract(comp);
        frontier = grown;
      }
      rest.subtract(comp);
      out.push_back(std::move(comp));
    }
    return out;
  }

  std::vector<std::uint64_t> key(const VertexSet& alive) const {
    Graph h = g_.induced(alive);
    std::vector<std::uint64_t> k{h.vertex_count()};
    for (const auto& r : h.rows()) k.insert(k.end(), r.words().begin(), r.words().end());
    return k;
  }

  IntPolynomial connected(const VertexSet& alive) {
    const auto count = alive.count();
    if (count == 1) return IntPolynomial({1, 1});
    auto k = key(alive);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;

    std::size_t pivot = alive.size();
    std::size_t best = 0;
    std::size_t min_degree = count;
    for (auto v = alive.first(); v < alive.size(); v = alive.next(v + 1)) {
      VertexSet nb = g_.row(v);
      nb &= alive;
      auto d = nb.count();
      if (d < min_degree) min_degree = d;
      if (pivot == alive.size() || d > best) {
        pivot = v;
        best = d;
      }
    }
    if (min_degree + 1 == count) {
      // complete graph: 1 + count*t
      IntPolynomial out({1, static_cast<long>(count)});
      memo_.emplace(std::move(k), out);
      return out;
    }
    VertexSet without = alive;
    without.reset(pivot);
    VertexSet without_closed = without;
    without_closed.subtract(g_.row(pivot));
    IntPolynomial out = run(without) + run(without_closed).shifted();
    memo_.emplace(std::move(k), out);
    return out;
  }

  const Graph& g_;
  std::unordered_map<std::vector<std::uint64_t>, IntPolynomial, KeyHash> memo_;
};

void require(bool ok, const char* what) {
  if (!ok) throw ConstraintError(what);
}

}  // namespace

IntPolynomial indpoly_enum(const Graph& g) {
  const auto n = g.vertex_count();
  VertexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  std::vector<unsigned long long> counts;
  enumerate(g, 0, all, counts);
  std::vector<mpz_class> c;
  for (auto x : counts) c.emplace_back(std::to_string(x));
  return IntPolynomial(std::move(c));
}

IntPolynomial indpoly_rec(const Graph& g) {
  const auto n = g.vertex_count();
  VertexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  return Recurrence(g).run(all);
}

IntPolynomial closed_form(ClosedFormKind kind, long n, long m) {
  std::vector<mpz_class> c;
  switch (kind) {
    case ClosedFormKind::Path:
      require(n >= 1, "path closed form requires n >= 1");
      for (long i = 0; i <= (n + 1) / 2; ++i) c.push_back(binomial(n + 1 - i, i));
      break;
    case ClosedFormKind::Cycle:
      require(n >= 3, "cycle closed form requires n >= 3");
      c.emplace_back(1);
      for (long i = 1; i <= n / 2; ++i) {
        mpz_class v = binomial(n - i - 1, i - 1) * n;
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(i));
        c.push_back(v);
      }
      break;
    case ClosedFormKind::Ce:
      require(n >= 4, "ce closed form requires n >= 4");
      for (long i = 0; i <= n / 2; ++i) c.push_back(binomial(n - i, i) + binomial(n - i - 2, i - 1));
      break;
    case ClosedFormKind::Pan:
      require(n >= 3, "pan closed form requires n >= 3");
      for (long i = 0; i <= n / 2 + 1; ++i)
        c.push_back(binomial(n - i, i) + binomial(n - i - 1, i - 1) + binomial(n - i + 1, i - 1));
      break;
    case ClosedFormKind::Bk:
      require(m >= 1 && n > m, "bk closed form requires m >= 1 and n > m");
      for (long i = 0; i <= n; ++i) {
        mpz_class pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(i));
        c.push_back((pow2 - 1) * binomial(m, i) + binomial(n, i));
      }
      break;
  }
  return IntPolynomial(std::move(c));
}

std::size_t mode_formula(ModeKind kind, long n) {
  using i128 = __int128;
  if (kind == ModeKind::Path) {
    require(n >= 1, "path mode requires n >= 1");
    for (i128 i = 0;; ++i)
      if (5 * i * i - (5 * i128(n) + 2) * i + i128(n) * n - 1 <= 0) return static_cast<std::size_t>(i);
  }
  require(n >= 3, "cycle mode requires n >= 3");
  for (i128 i = 1;; ++i)
    if (5 * i * i - (5 * i128(n) - 4) * i + i128(n) * n - 2 * i128(n) + 1 <= 0)
      return static_cast<std::size_t>(i);
}

}  // namespace wlplab
