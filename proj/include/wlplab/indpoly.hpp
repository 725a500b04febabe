#pragma once

#include <cstddef>

#include "wlplab/graph.hpp"
#include "wlplab/polynomial.hpp"

namespace wlplab {

/// Independence polynomial by backtracking over all independent sets.
/// Exponential; meant as the oracle for small graphs (n up to ~40).
IntPolynomial indpoly_enum(const Graph& g);

/// Independence polynomial by the vertex-deletion recurrence
///   I(G) = I(G - w) + t I(G - N[w])
/// with factorisation over connected components.  The pivot w is the
/// maximum-degree vertex (smallest label on ties) and subresults are
/// memoised on the adjacency rows of the relabelled induced subgraph.
IntPolynomial indpoly_rec(const Graph& g);

enum class ClosedFormKind { Path, Cycle, Ce, Pan, Bk };

/// Binomial closed forms.  Path/Cycle/Ce/Pan take {n}; Bk takes {m, n}.
IntPolynomial closed_form(ClosedFormKind kind, long n, long m = 0);
inline IntPolynomial closed_form_bk(long m, long n) { return closed_form(ClosedFormKind::Bk, n, m); }

enum class ModeKind { Path, Cycle };

/// Mode of I(P_n) (lambda_n) or I(C_n) (rho_n) as the least integer root
/// of the integer quadratic inequality; no floating point involved.
std::size_t mode_formula(ModeKind kind, long n);

}  // namespace wlplab
