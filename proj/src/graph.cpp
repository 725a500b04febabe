#include "wlplab/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace wlplab {

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::any() const {
  return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::size_t VertexSet::next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) {
      std::size_t idx = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      return idx < size_ ? idx : size_;
    }
    if (++wi == words_.size()) return size_;
    w = words_[wi];
  }
}

std::vector<std::size_t> VertexSet::indices() const {
  std::vector<std::size_t> out;
  for (auto i = first(); i < size_; i = next(i + 1)) out.push_back(i);
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  for (std::size_t i = words_.size(); i-- > 0;)
    if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t VertexSet::hash() const {
  std::size_t h = size_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : adj_(n, VertexSet(n)) {
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw ConstraintError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} has an endpoint outside 1.." + std::to_string(n));
    if (u == v) throw ConstraintError("loop at vertex " + std::to_string(u));
    if (adj_[u - 1].test(v - 1))
      throw ConstraintError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[u - 1].set(v - 1);
    adj_[v - 1].set(u - 1);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : adj_) twice += r.count();
  return twice / 2;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u < 1 || u > adj_.size() || v < 1 || v > adj_.size()) return false;
  return adj_[u - 1].test(v - 1);
}

std::size_t Graph::degree(std::size_t v) const {
  if (v < 1 || v > adj_.size()) throw ConstraintError("vertex " + std::to_string(v) + " out of range");
  return adj_[v - 1].count();
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (auto v = adj_[u].next(u + 1); v < adj_.size(); v = adj_[u].next(v + 1))
      out.emplace_back(u + 1, v + 1);
  return out;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
  VertexSet out = s;
  for (auto i = s.first(); i < s.size(); i = s.next(i + 1)) out |= adj_[i];
  return out;
}

bool Graph::is_independent(const VertexSet& s) const {
  for (auto i = s.first(); i < s.size(); i = s.next(i + 1))
    if (adj_[i].intersects(s)) return false;
  return true;
}

Graph Graph::induced(const VertexSet& keep) const {
  auto survivors = keep.indices();
  std::vector<std::size_t> relabel(adj_.size(), 0);
  for (std::size_t i = 0; i < survivors.size(); ++i) relabel[survivors[i]] = i;
  Graph h;
  h.adj_.assign(survivors.size(), VertexSet(survivors.size()));
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    const auto& r = adj_[survivors[i]];
    for (auto j = r.first(); j < r.size(); j = r.next(j + 1))
      if (keep.test(j)) h.adj_[i].set(relabel[j]);
  }
  return h;
}

namespace {

void check_vertex(const Graph& g, std::size_t v) {
  if (v < 1 || v > g.vertex_count())
    throw ConstraintError("vertex " + std::to_string(v) + " out of range 1.." +
                          std::to_string(g.vertex_count()));
}

VertexSet all_vertices(std::size_t n) {
  VertexSet s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i);
  return s;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstraintError(what);
}

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

EdgeList cycle_edges(std::size_t n) {
  EdgeList e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return e;
}

}  // namespace

Graph delete_vertex(const Graph& g, std::size_t v) {
  check_vertex(g, v);
  auto keep = all_vertices(g.vertex_count());
  keep.reset(v - 1);
  return g.induced(keep);
}

Graph delete_closed_neighborhood(const Graph& g, std::size_t v) {
  check_vertex(g, v);
  auto keep = all_vertices(g.vertex_count());
  keep.subtract(g.row(v - 1));
  keep.reset(v - 1);
  return g.induced(keep);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  auto edges = g1.edges();
  const auto offset = g1.vertex_count();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph(offset + g2.vertex_count(), edges);
}

Graph path_graph(long n) {
  require(n >= 1, "path:n requires n >= 1");
  EdgeList e;
  for (long i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(static_cast<std::size_t>(n), e);
}

Graph cycle_graph(long n) {
  require(n >= 3, "cycle:n requires n >= 3");
  return Graph(static_cast<std::size_t>(n), cycle_edges(static_cast<std::size_t>(n)));
}

Graph pan_graph(long n) {
  require(n >= 3, "pan:n requires n >= 3");
  auto e = cycle_edges(static_cast<std::size_t>(n));
  e.emplace_back(n, n + 1);
  return Graph(static_cast<std::size_t>(n + 1), e);
}

Graph ce_graph(long n) {
  require(n >= 4, "ce:n requires n >= 4 (for n = 3 the chord {1,3} is already a cycle edge)");
  auto e = cycle_edges(static_cast<std::size_t>(n));
  e.emplace_back(n - 2, n);
  return Graph(static_cast<std::size_t>(n), e);
}

Graph tadpole3_graph(long n) {
  require(n >= 1, "tadpole:3,n requires n >= 1");
  EdgeList e{{1, 2}, {2, 3}, {1, 3}, {3, 4}};
  for (long i = 4; i < n + 3; ++i) e.emplace_back(i, i + 1);
  return Graph(static_cast<std::size_t>(n + 3), e);
}

Graph complete_graph(long n) {
  require(n >= 1, "complete:n requires n >= 1");
  EdgeList e;
  for (long u = 1; u <= n; ++u)
    for (long v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph(static_cast<std::size_t>(n), e);
}

Graph empty_graph(long n) {
  require(n >= 1, "empty:n requires n >= 1");
  return Graph(static_cast<std::size_t>(n), {});
}

Graph bk_graph(long m, long n) {
  require(m >= 1 && n > m, "bk:m,n requires m >= 1 and n > m");
  const long v1 = n - m;
  EdgeList e;
  for (long a = 1; a <= v1; ++a)
    for (long b = v1 + 1; b <= n; ++b) e.emplace_back(a, b);
  for (long i = 0; i < m; ++i) e.emplace_back(v1 + 1 + i, n + 1 + i);
  return Graph(static_cast<std::size_t>(n + m), e);
}

Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_n = false;
  std::size_t n = 0;
  EdgeList e;
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    if (!have_n) {
      long long value = 0;
      if (!(ls >> value) || value < 0)
        throw ConstraintError("edge list line " + std::to_string(lineno) + ": expected vertex count");
      n = static_cast<std::size_t>(value);
      have_n = true;
      continue;
    }
    long long u = 0, v = 0;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest))
      throw ConstraintError("edge list line " + std::to_string(lineno) + ": expected `u v`");
    if (u < 1 || v <= u || static_cast<std::size_t>(v) > n)
      throw ConstraintError("edge list line " + std::to_string(lineno) + ": need 1 <= u < v <= n");
    e.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  if (!have_n) throw ConstraintError("edge list is empty");
  return Graph(n, e);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace wlplab
