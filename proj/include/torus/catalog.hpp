#pragma once

#include "torus/galois_lattice.hpp"

#include <cstddef>

namespace torus {

// Trivial action of the group on Z^rank.
GaloisLattice split_torus(const FiniteGroup& group, std::size_t rank);

// Regular representation Z[G]: each element acts by the permutation matrix
// of left translation.
GaloisLattice weil_restriction(const FiniteGroup& group);

// Quotient of the regular representation of a cyclic group by the norm
// vector; rank |G| - 1.  The generator must generate the group
// (NotCyclic otherwise) and fixes the basis: e_i is the image of
// generator^{i-1}.
GaloisLattice norm_one_torus(const FiniteGroup& group, std::size_t generator);

// Block-diagonal sum of two lattices over the same group.
GaloisLattice direct_sum(const GaloisLattice& a, const GaloisLattice& b);

} // namespace torus
