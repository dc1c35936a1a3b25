#pragma once

#include "torus/galois_lattice.hpp"
#include "torus/local.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace torus {

// One finite place: decomposition subgroup of the global group, its inertia,
// a Frobenius representative and the residue cardinality.  Only places where
// inertia acts nontrivially contribute; unlisted places count as unramified.
struct PlaceData {
    std::string label;
    Subgroup decomposition; // subgroup of the global group
    Subgroup inertia;       // subgroup of the global group inside decomposition
    std::size_t frobenius;  // element of the decomposition subgroup
    Int residue_q;
};

enum class GlobalCase {
    number_field,   // case N
    function_field, // case F
};

struct GlobalTorusSpec {
    GlobalCase field_case = GlobalCase::function_field;
    Int constants_q = 0;  // case F: size of the field of constants, >= 2
    Int genus = 0;        // case F: genus >= 0
    Int discriminant = 0; // case N: nonzero field discriminant
    GaloisLattice lattice;
    std::vector<PlaceData> places;
};

// Throws ValidationError (with the place label) on inconsistent data.
void validate_global_spec(const GlobalTorusSpec& spec);

// Restriction of the global lattice to one place's decomposition subgroup,
// with inertia and Frobenius reindexed; fully validated local data.
LocalTorusData place_local_data(const GlobalTorusSpec& spec,
                                const PlaceData& place);

// Product over the listed places of the local factors
// |ker(1 - F | cocharacter coinvariants)_tor|.
Int finite_part(const GlobalTorusSpec& spec);

// Pole order of the global Artin L-function at s = 1: the rank of the
// full-group invariants of the global lattice (the multiplicity of the
// principal character).
std::size_t pole_order(const GlobalTorusSpec& spec);

// Exact value of the global invariant with the analytic pieces kept
// symbolic: coefficient * (ln q)^lnq_exponent * |disc|^(sqrt_disc_exponent/2),
// times an unevaluated archimedean integral in the number-field case.
struct SymbolicValue {
    Rational coefficient;
    long lnq_exponent = 0;
    long sqrt_disc_exponent = 0;
    bool archimedean_unevaluated = false;
};

SymbolicValue shyr_invariant(const GlobalTorusSpec& spec);

struct GlobalReport {
    Int finite_part;
    std::size_t pole_order = 0;
    SymbolicValue value;
};

GlobalReport global_report(const GlobalTorusSpec& spec);

} // namespace torus
