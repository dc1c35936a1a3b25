#pragma once

#include "torus/fin_ab_group.hpp"
#include "torus/galois_lattice.hpp"
#include "torus/int_matrix.hpp"

#include <cstddef>

namespace torus {

// True iff q >= 2 is p^k for a prime p.
bool is_prime_power(const Int& q);

// Everything the local computations need at one prime: the character action
// of the local Galois group, the inertia subgroup, a Frobenius
// representative and the residue cardinality.  The constructor validates:
// inertia normal, the quotient by inertia cyclic and generated by the
// Frobenius coset, q >= 2.  Primality of q is not enforced, only flagged.
class LocalTorusData {
public:
    LocalTorusData(GaloisLattice lattice, Subgroup inertia,
                   std::size_t frobenius, Int residue_q);

    const GaloisLattice& lattice() const { return lattice_; }
    const Subgroup& inertia() const { return inertia_; }
    std::size_t frobenius() const { return frobenius_; }
    const Int& residue_q() const { return residue_q_; }
    bool q_is_prime_power() const { return q_is_prime_power_; }

private:
    GaloisLattice lattice_;
    Subgroup inertia_;
    std::size_t frobenius_;
    Int residue_q_;
    bool q_is_prime_power_;
};

// True iff every inertia element acts as the identity (split over an
// unramified extension).
bool check_good_reduction(const LocalTorusData& data);

// det(1 - h(F) q^{-s})^{-1} on the invariants X^I, as an exact rational.
Rational artin_l_factor(const LocalTorusData& data, unsigned s = 1);

// |T(k)| = |det(q - action(F))| on the full lattice; requires good
// reduction.  Satisfies count * q^{-d} = 1/artin_l_factor(data, 1).
Int point_count_good_reduction(const LocalTorusData& data);

// Frobenius action on the inertia coinvariants of the cocharacter lattice:
// the presentation of the quotient plus the descending endomorphism matrix
// (given on the ambient lattice).
struct FrobeniusOnCoinvariants {
    CoinvariantsPresentation presentation;
    IntMatrix matrix;
};

FrobeniusOnCoinvariants frobenius_on_coinvariants(const LocalTorusData& data);

// Group of components of the reduction: ker(1 - F) on the inertia
// coinvariants of the cocharacter lattice.
FinAbGroup component_group(const LocalTorusData& data);

// Torsion order of the component group.
Int local_shyr_factor(const LocalTorusData& data);

struct LocalReport {
    bool good_reduction = false;
    Rational l_factor_at_1;
    FinAbGroup component_group;
    Int shyr_factor;
    FinAbGroup h1_inertia;
    bool q_is_prime_power = true;
};

// All local invariants at once.  Runs the torsion/H^1 cross-check on every
// call and throws CrossCheckFailure when the two independent routes to
// torsion-freeness disagree.
LocalReport local_report(const LocalTorusData& data);

} // namespace torus
