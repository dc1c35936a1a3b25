#pragma once

#include "torus/galois_lattice.hpp"

namespace torus {

// K-isogeny test: two lattices over the same group present isogenous tori
// iff their characters agree (characters determine rational representations
// of a finite group).  Throws GroupMismatch when the groups differ.
bool isogenous(const GaloisLattice& a, const GaloisLattice& b);

// The two good-reduction companions of a lattice under a normal subgroup:
// the image lattice of the trace map and the invariants lattice, each with
// its induced full-group action.  Returns whether their characters agree —
// i.e. whether the companions are isogenous.
bool good_reduction_parts_isogenous(const GaloisLattice& lattice,
                                    const Subgroup& h);

} // namespace torus
