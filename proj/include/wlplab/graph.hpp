#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wlplab {

/// Raised when family parameters or graph input violate their constraints.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-width dynamic bitset over vertex indices 0..size-1.
///
/// Ordering compares the sets as unsigned integers with bit 0 as the
/// least significant bit, which is the canonical basis order used for the
/// monomials of A(G).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  bool intersects(const VertexSet& other) const;

  /// Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const;
  std::size_t first() const { return next(0); }

  /// Set bits in increasing order.
  std::vector<std::size_t> indices() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Removes every element of `other`.
  VertexSet& subtract(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  bool operator==(const VertexSet& other) const = default;
  std::strong_ordering operator<=>(const VertexSet& other) const;

  std::size_t hash() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Simple undirected graph on vertices 1..n.  Immutable after construction.
///
/// Internally vertices are stored 0-based; every public entry point that
/// takes or returns a vertex label uses the 1-based convention.
class Graph {
 public:
  Graph() = default;
  /// Builds a graph from 1-based edges.  Rejects loops, out-of-range
  /// endpoints and duplicate edges.
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;
  bool has_edge(std::size_t u, std::size_t v) const;  // 1-based
  std::size_t degree(std::size_t v) const;             // 1-based
  /// 1-based edges {u, v} with u < v, sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// 0-based adjacency rows, for the kernels.
  const VertexSet& row(std::size_t i) const { return adj_[i]; }
  const std::vector<VertexSet>& rows() const { return adj_; }

  /// Closed neighbourhood N[S] of a 0-based vertex set.
  VertexSet closed_neighborhood(const VertexSet& s) const;
  bool is_independent(const VertexSet& s) const;

  /// Induced subgraph on the 0-based set `keep`; survivors are relabelled
  /// contiguously in increasing order of their old labels.
  Graph induced(const VertexSet& keep) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<VertexSet> adj_;
};

/// G with vertex v (1-based) removed.
Graph delete_vertex(const Graph& g, std::size_t v);
/// G with N[v] (1-based v) removed.
Graph delete_closed_neighborhood(const Graph& g, std::size_t v);
/// g1 followed by g2, whose labels are shifted by |V(g1)|.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Named families with the vertex labelling used throughout the library.
Graph path_graph(long n);
Graph cycle_graph(long n);
/// C_n on 1..n with pendant vertex n+1 attached to n.
Graph pan_graph(long n);
/// C_n with the chord {n-2, n}.
Graph ce_graph(long n);
/// Triangle on 1..3, path on 4..n+3, bridge {3,4}.
Graph tadpole3_graph(long n);
Graph complete_graph(long n);
Graph empty_graph(long n);
/// Bipartite family: V1 = 1..n-m, V2 = n-m+1..n, V3 = n+1..n+m, with all
/// V1-V2 edges and the matching V2[i]-V3[i].
Graph bk_graph(long m, long n);

/// Reads the edge-list format: first non-comment line is n, then `u v` lines.
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

}  // namespace wlplab
