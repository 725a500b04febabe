#pragma once

#include <cstddef>
#include <vector>

#include "wlplab/graph.hpp"
#include "wlplab/sparse_matrix.hpp"

namespace wlplab {

/// Monomial basis of [A(G)]_k: the k-independent sets, in increasing order
/// of their bitset encoding (vertex 1 is the lowest bit).
struct DegreeBasis {
  std::size_t k = 0;
  std::vector<VertexSet> sets;
};

DegreeBasis degree_basis(const Graph& g, std::size_t k);

/// Bases for every degree 0..alpha(G) from one enumeration pass.
std::vector<DegreeBasis> all_degree_bases(const Graph& g);

/// Matrix of multiplication by x_1 + ... + x_n from degree k to k+1.
/// Rows follow degree_basis(g, k+1), columns degree_basis(g, k); entry
/// (T, S) is 1 exactly when S is a subset of T.
SparseMatrix lefschetz_matrix(const Graph& g, std::size_t k);
SparseMatrix lefschetz_matrix(const Graph& g, const DegreeBasis& source, const DegreeBasis& target);

}  // namespace wlplab
