#include "torus/global.hpp"

#include "torus/errors.hpp"

#include <future>
#include <utility>
#include <vector>

namespace torus {

namespace {

Rational rational_power(const Int& base, const Int& exponent) {
    unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    Int p = boost::multiprecision::pow(base, e);
    return exponent < 0 ? Rational(1, p) : Rational(p);
}

} // namespace

void validate_global_spec(const GlobalTorusSpec& spec) {
    require_valid(spec.lattice);
    if (spec.field_case == GlobalCase::function_field) {
        if (spec.constants_q < 2)
            throw ValidationError("case F needs constants_q >= 2");
        if (spec.genus < 0)
            throw ValidationError("case F needs genus >= 0");
    } else {
        if (spec.discriminant == 0)
            throw ValidationError("case N needs a nonzero discriminant");
    }
    for (const PlaceData& place : spec.places)
        place_local_data(spec, place); // constructor validates
}

LocalTorusData place_local_data(const GlobalTorusSpec& spec,
                                const PlaceData& place) {
    try {
        if (!(place.decomposition.parent() == spec.lattice.group) ||
            !(place.inertia.parent() == spec.lattice.group))
            throw ValidationError("place subgroups belong to a different group");
        GaloisLattice local_lattice =
            restrict_to(spec.lattice, place.decomposition);
        std::vector<std::size_t> inertia_reindexed;
        for (std::size_t h : place.inertia.elements()) {
            if (!place.decomposition.contains(h))
                throw ValidationError("inertia not inside decomposition subgroup");
            inertia_reindexed.push_back(place.decomposition.index_of(h));
        }
        if (!place.decomposition.contains(place.frobenius))
            throw ValidationError("frobenius not inside decomposition subgroup");
        return LocalTorusData(
            std::move(local_lattice),
            Subgroup(place.decomposition.as_group(), std::move(inertia_reindexed)),
            place.decomposition.index_of(place.frobenius), place.residue_q);
    } catch (const ValidationError& e) {
        throw ValidationError("place " + place.label + ": " + e.what());
    }
}

Int finite_part(const GlobalTorusSpec& spec) {
    // places are independent; fan the local computations out
    std::vector<std::future<Int>> factors;
    factors.reserve(spec.places.size());
    for (const PlaceData& place : spec.places)
        factors.push_back(std::async(std::launch::async, [&spec, &place]() {
            return local_shyr_factor(place_local_data(spec, place));
        }));
    Int product = 1;
    for (auto& f : factors)
        product *= f.get();
    return product;
}

std::size_t pole_order(const GlobalTorusSpec& spec) {
    return invariants_lattice(spec.lattice, Subgroup::whole(spec.lattice.group))
        .cols();
}

namespace {

SymbolicValue assemble_value(const GlobalTorusSpec& spec, const Int& fp,
                             std::size_t r_k) {
    SymbolicValue value;
    const Int d = spec.lattice.rank;
    if (spec.field_case == GlobalCase::function_field) {
        // |disc|^{-d/2} = q^{-d(g-1)} is exact here and folds into the
        // coefficient
        value.coefficient =
            Rational(fp) * rational_power(spec.constants_q,
                                          -(d * (spec.genus - 1)));
        value.lnq_exponent = -static_cast<long>(r_k);
        value.sqrt_disc_exponent = 0;
        value.archimedean_unevaluated = false;
    } else {
        value.coefficient = Rational(fp);
        value.lnq_exponent = 0;
        value.sqrt_disc_exponent = -static_cast<long>(d);
        value.archimedean_unevaluated = true;
    }
    return value;
}

} // namespace

SymbolicValue shyr_invariant(const GlobalTorusSpec& spec) {
    validate_global_spec(spec);
    return assemble_value(spec, finite_part(spec), pole_order(spec));
}

GlobalReport global_report(const GlobalTorusSpec& spec) {
    validate_global_spec(spec);
    GlobalReport report{finite_part(spec), pole_order(spec), {}};
    report.value = assemble_value(spec, report.finite_part, report.pole_order);
    return report;
}

} // namespace torus
