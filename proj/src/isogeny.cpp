#include "torus/isogeny.hpp"

#include "torus/errors.hpp"

namespace torus {

bool isogenous(const GaloisLattice& a, const GaloisLattice& b) {
    if (!(a.group == b.group))
        throw GroupMismatch("isogeny test needs lattices over the same group");
    return character(a) == character(b);
}

bool good_reduction_parts_isogenous(const GaloisLattice& lattice,
                                    const Subgroup& h) {
    if (!h.is_normal())
        throw ValidationError("good-reduction comparison needs a normal subgroup");
    CanonicalDecomposition dec = canonical_decomposition(lattice, h);
    GaloisLattice invariants_module = induced_module_on_sublattice(
        lattice, invariants_lattice(lattice, h));
    return character(dec.n_module) == character(invariants_module);
}

} // namespace torus
