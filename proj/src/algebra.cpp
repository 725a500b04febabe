#include "wlplab/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace wlplab {

namespace {

void collect(const Graph& g, VertexSet& current, std::size_t size, const VertexSet& candidates,
             std::vector<DegreeBasis>& out, std::size_t only_k, bool all) {
  if (all || size == only_k) {
    if (out.size() <= size) out.resize(size + 1);
    out[size].sets.push_back(current);
  }
  if (!all && size == only_k) return;
  for (auto v = candidates.first(); v < candidates.size(); v = candidates.next(v + 1)) {
    VertexSet next = candidates;
    for (auto u = next.first(); u <= v && u < next.size(); u = next.next(u + 1)) next.reset(u);
    next.subtract(g.row(v));
    current.set(v);
    collect(g, current, size + 1, next, out, only_k, all);
    current.reset(v);
  }
}

std::vector<DegreeBasis> enumerate(const Graph& g, std::size_t only_k, bool all) {
  const auto n = g.vertex_count();
  VertexSet current(n), candidates(n);
  for (std::size_t i = 0; i < n; ++i) candidates.set(i);
  std::vector<DegreeBasis> out;
  collect(g, current, 0, candidates, out, only_k, all);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k].k = k;
    std::sort(out[k].sets.begin(), out[k].sets.end());
  }
  return out;
}

}  // namespace

DegreeBasis degree_basis(const Graph& g, std::size_t k) {
  auto bases = enumerate(g, k, false);
  if (k < bases.size()) return std::move(bases[k]);
  return DegreeBasis{k, {}};
}

std::vector<DegreeBasis> all_degree_bases(const Graph& g) { return enumerate(g, 0, true); }

SparseMatrix lefschetz_matrix(const Graph& g, const DegreeBasis& source, const DegreeBasis& target) {
  if (target.k != source.k + 1) throw std::invalid_argument("target basis must be one degree above the source");
  std::unordered_map<VertexSet, std::uint32_t, VertexSetHash> row_of;
  row_of.reserve(target.sets.size());
  for (std::size_t i = 0; i < target.sets.size(); ++i) row_of.emplace(target.sets[i], static_cast<std::uint32_t>(i));

  std::vector<std::vector<std::uint32_t>> rows(target.sets.size());
  const auto n = g.vertex_count();
  for (std::size_t c = 0; c < source.sets.size(); ++c) {
    const VertexSet& s = source.sets[c];
    VertexSet blocked = g.closed_neighborhood(s);
    for (std::size_t v = 0; v < n; ++v) {
      if (blocked.test(v)) continue;
      VertexSet t = s;
      t.set(v);
      rows[row_of.at(t)].push_back(static_cast<std::uint32_t>(c));
    }
  }
  return SparseMatrix(target.sets.size(), source.sets.size(), std::move(rows));
}

SparseMatrix lefschetz_matrix(const Graph& g, std::size_t k) {
  auto bases = all_degree_bases(g);
  const DegreeBasis empty_k{k, {}}, empty_k1{k + 1, {}};
  const DegreeBasis& src = k < bases.size() ? bases[k] : empty_k;
  const DegreeBasis& dst = k + 1 < bases.size() ? bases[k + 1] : empty_k1;
  return lefschetz_matrix(g, src, dst);
}

}  // namespace wlplab
