#pragma once

#include "torus/fin_ab_group.hpp"
#include "torus/finite_group.hpp"
#include "torus/int_matrix.hpp"
#include "torus/lattice_ops.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace torus {

// A finite group acting on Z^d by unimodular matrices.  The stored action
// is always the one on the character lattice; the cocharacter action is
// derived through dual_lattice().  Left-action convention:
// action(g*h) = action(g)*action(h).
//
// Plain aggregate; build freely, then check with validate() (the compute
// operations assume a valid value).
struct GaloisLattice {
    FiniteGroup group;
    std::size_t rank = 0;
    // indexed by element, each rank x rank; defaults to the trivial group
    // acting on the rank-0 lattice
    std::vector<IntMatrix> action{IntMatrix{}};

    const IntMatrix& act(std::size_t g) const { return action[g]; }
};

struct ValidationReport {
    bool ok = true;
    std::string message; // first violation found, empty when ok
};

// Checks identity action, the homomorphism property on all pairs, and
// unimodularity of every matrix.  Diagnostic return, never throws.
ValidationReport validate(const GaloisLattice& lattice);

// Throws ValidationError when validate() fails.
void require_valid(const GaloisLattice& lattice);

// Canonical basis of X^H = { x : action(h) x = x for all h in H },
// one column per basis vector.
IntMatrix invariants_lattice(const GaloisLattice& lattice, const Subgroup& h);

// Presentation of the coinvariants X_H = Z^d / <(action(h) - 1) x>,
// with enough change-of-basis data to push vectors into the quotient.
struct CoinvariantsPresentation {
    FinAbGroup structure;
    IntMatrix relations; // canonical basis of the relation lattice in Z^d
    IntMatrix u;         // unimodular row transform from the Smith form
    std::vector<Int> diag; // nonzero Smith entries of `relations`

    // canonical coordinates of x + relations: the i-th Smith coordinate is
    // reduced mod diag[i]; free coordinates are kept as they are
    std::vector<Int> project(const std::vector<Int>& x) const;

    // true iff x and y define the same class in the quotient
    bool same_class(const std::vector<Int>& x, const std::vector<Int>& y) const;
};

CoinvariantsPresentation coinvariants(const GaloisLattice& lattice,
                                      const Subgroup& h);

// Sum of action(h) over h in H.
IntMatrix trace_map(const GaloisLattice& lattice, const Subgroup& h);

// Kernel/image splitting of the trace map: Y = ker(tr), N = image lattice.
// y_module carries the H-action on Y in basis coordinates; n_module carries
// the full-group action on N (well defined whenever N is stable, in
// particular for normal H).
struct CanonicalDecomposition {
    IntMatrix y_basis; // d x rank(Y)
    IntMatrix n_basis; // d x rank(N)
    GaloisLattice y_module;
    GaloisLattice n_module;
};

CanonicalDecomposition canonical_decomposition(const GaloisLattice& lattice,
                                               const Subgroup& h);

// First group cohomology H^1(H, X) from the full cocycle condition over all
// element pairs, modulo coboundaries.  Always finite; throws InternalError
// if a free part appears.
FinAbGroup h1(const GaloisLattice& lattice, const Subgroup& h);

// Trace of action(g) for every g, indexed by element.
std::vector<Int> character(const GaloisLattice& lattice);

// Contragredient action: action(g) replaced by transpose(action(g^-1)).
GaloisLattice dual_lattice(const GaloisLattice& lattice);

// Same matrices viewed as a module over the subgroup, elements reindexed.
GaloisLattice restrict_to(const GaloisLattice& lattice, const Subgroup& d);

// Action of every group element on a stable sublattice, written in the
// coordinates of `basis` (full column rank).  Throws NotWellDefined when
// some element moves the sublattice off itself.
GaloisLattice induced_module_on_sublattice(const GaloisLattice& lattice,
                                           const IntMatrix& basis);

} // namespace torus
