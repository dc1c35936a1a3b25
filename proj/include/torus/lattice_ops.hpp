#pragma once

#include "torus/fin_ab_group.hpp"
#include "torus/int_matrix.hpp"

namespace torus {

// Smith normal form U*A*V = D with U, V unimodular and D diagonal,
// non-negative, each diagonal entry dividing the next.
struct SnfDecomposition {
    IntMatrix u; // m x m
    IntMatrix d; // m x n
    IntMatrix v; // n x n
};

SnfDecomposition smith_normal_form(const IntMatrix& a);

// Diagonal of the Smith form only (no transforms); cheaper when U and V are
// not needed.  Entries are the d_i including any 1s, in chain order.
std::vector<Int> smith_diagonal(const IntMatrix& a);

// Canonical basis of the column lattice of `a` (column-style Hermite form,
// zero columns dropped).  Result has full column rank.
IntMatrix column_hnf_basis(const IntMatrix& a);

// Canonical Z-basis of { x : a*x = 0 }, one column per basis vector.
IntMatrix kernel_lattice(const IntMatrix& a);

// Structure of Z^m / (column span of a) for an m x n matrix.
FinAbGroup cokernel_structure(const IntMatrix& a);

// Unique X with basis*X = rhs, for `basis` of full column rank.  Throws
// NotWellDefined when some column of rhs is outside the column span.
IntMatrix solve_exact(const IntMatrix& basis, const IntMatrix& rhs);

// True iff every column of vecs lies in the column span of `a`.
bool in_column_span(const IntMatrix& a, const IntMatrix& vecs);

// Structure of span(basis)/span(sub), for sub contained in span(basis) and
// `basis` of full column rank.
FinAbGroup lattice_quotient(const IntMatrix& basis, const IntMatrix& sub);

// Structure of (span(generators) + R)/R inside Z^m / R,
// where R = column span of `relations`.
FinAbGroup subgroup_structure_in_quotient(const IntMatrix& relations,
                                          const IntMatrix& generators);

// Structure of ker(M : Z^m/R -> Z^m/R) = { x + R : M*x in R } / R.
// Throws NotWellDefined unless M maps R into itself.
FinAbGroup kernel_of_endomorphism_on_quotient(const IntMatrix& relations,
                                              const IntMatrix& m);

} // namespace torus
