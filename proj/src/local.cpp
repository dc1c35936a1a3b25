#include "torus/local.hpp"

#include "torus/errors.hpp"
#include "torus/lattice_ops.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <set>
#include <utility>

namespace torus {

namespace {

Int nth_root_floor(const Int& x, unsigned k) {
    if (k == 1)
        return x;
    Int lo = 1;
    Int hi = Int(1) << (boost::multiprecision::msb(x) / k + 1);
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, k) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace

bool is_prime_power(const Int& q) {
    if (q < 2)
        return false;
    const unsigned bits = boost::multiprecision::msb(q) + 1;
    // the maximal exact power q = r^k has r prime exactly when q is a
    // prime power
    for (unsigned k = bits; k >= 1; --k) {
        Int r = nth_root_floor(q, k);
        if (boost::multiprecision::pow(r, k) == q)
            return boost::multiprecision::miller_rabin_test(r, 25);
    }
    return false; // unreachable, k = 1 always matches
}

LocalTorusData::LocalTorusData(GaloisLattice lattice, Subgroup inertia,
                               std::size_t frobenius, Int residue_q)
    : lattice_(std::move(lattice)), inertia_(std::move(inertia)),
      frobenius_(frobenius), residue_q_(std::move(residue_q)),
      q_is_prime_power_(false) {
    require_valid(lattice_);
    if (!(inertia_.parent() == lattice_.group))
        throw ValidationError("inertia subgroup belongs to a different group");
    if (!inertia_.is_normal())
        throw ValidationError("inertia subgroup is not normal");
    if (frobenius_ >= lattice_.group.order())
        throw ValidationError("frobenius index out of range");
    if (residue_q_ < 2)
        throw ValidationError("residue_q must be >= 2");

    // the Frobenius coset must generate the quotient by inertia (which is
    // then cyclic); checked by coset enumeration
    const FiniteGroup& g = lattice_.group;
    auto coset_id = [&](std::size_t x) {
        std::size_t best = g.order();
        for (std::size_t h : inertia_.elements())
            best = std::min(best, g.mult(x, h));
        return best;
    };
    std::set<std::size_t> all_cosets;
    for (std::size_t x = 0; x < g.order(); ++x)
        all_cosets.insert(coset_id(x));
    std::set<std::size_t> reached;
    std::size_t x = 0;
    do {
        reached.insert(coset_id(x));
        x = g.mult(x, frobenius_);
    } while (x != 0);
    if (reached != all_cosets)
        throw ValidationError(
            "frobenius does not generate the quotient by inertia");

    q_is_prime_power_ = is_prime_power(residue_q_);
}

bool check_good_reduction(const LocalTorusData& data) {
    for (std::size_t h : data.inertia().elements())
        if (!data.lattice().act(h).is_identity())
            return false;
    return true;
}

Rational artin_l_factor(const LocalTorusData& data, unsigned s) {
    if (s == 0)
        throw ValidationError("artin_l_factor requires s >= 1");
    IntMatrix basis = invariants_lattice(data.lattice(), data.inertia());
    IntMatrix moved = data.lattice().act(data.frobenius()) * basis;
    if (data.inertia().size() > 1) {
        // inertia fixes X^I pointwise, so any Frobenius representative must
        // move the basis identically
        std::size_t h = data.inertia().elements()[1];
        std::size_t f2 = data.lattice().group.mult(data.frobenius(), h);
        if (data.lattice().act(f2) * basis != moved)
            throw InternalError(
                "Frobenius action on invariants depends on the representative");
    }
    IntMatrix h_f = solve_exact(basis, moved);
    const std::size_t d_i = basis.cols();
    Int qs = boost::multiprecision::pow(data.residue_q(), s);
    IntMatrix scaled(d_i, d_i);
    for (std::size_t i = 0; i < d_i; ++i)
        for (std::size_t j = 0; j < d_i; ++j)
            scaled(i, j) = (i == j ? qs : Int(0)) - h_f(i, j);
    Int det = scaled.determinant();
    if (det == 0)
        throw SingularMatrix("1 - h(F)/q^s is singular");
    return Rational(boost::multiprecision::pow(qs, static_cast<unsigned>(d_i)),
                    det);
}

Int point_count_good_reduction(const LocalTorusData& data) {
    if (!check_good_reduction(data))
        throw NotGoodReduction("point count needs trivially-acting inertia");
    const std::size_t d = data.lattice().rank;
    const IntMatrix& rho_f = data.lattice().act(data.frobenius());
    IntMatrix scaled(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            scaled(i, j) = (i == j ? data.residue_q() : Int(0)) - rho_f(i, j);
    Int det = scaled.determinant();
    if (det <= 0)
        throw InternalError("point count came out non-positive");
    return det;
}

FrobeniusOnCoinvariants frobenius_on_coinvariants(const LocalTorusData& data) {
    GaloisLattice cochar = dual_lattice(data.lattice());
    CoinvariantsPresentation pres = coinvariants(cochar, data.inertia());
    IntMatrix matrix = cochar.act(data.frobenius());
    if (pres.relations.cols() > 0 &&
        !in_column_span(pres.relations, matrix * pres.relations))
        throw NotWellDefined(
            "Frobenius does not preserve the coinvariant relations");
    return {std::move(pres), std::move(matrix)};
}

FinAbGroup component_group(const LocalTorusData& data) {
    FrobeniusOnCoinvariants fc = frobenius_on_coinvariants(data);
    IntMatrix one_minus_f =
        IntMatrix::identity(data.lattice().rank) - fc.matrix;
    return kernel_of_endomorphism_on_quotient(fc.presentation.relations,
                                              one_minus_f);
}

Int local_shyr_factor(const LocalTorusData& data) {
    return component_group(data).torsion_order();
}

LocalReport local_report(const LocalTorusData& data) {
    LocalReport report;
    report.good_reduction = check_good_reduction(data);
    report.l_factor_at_1 = artin_l_factor(data, 1);
    report.component_group = component_group(data);
    report.shyr_factor = report.component_group.torsion_order();
    report.h1_inertia = h1(data.lattice(), data.inertia());
    report.q_is_prime_power = data.q_is_prime_power();

    // torsion-freeness of the component group and vanishing of H^1 are two
    // independent routes to the same fact
    if ((report.shyr_factor == 1) != report.h1_inertia.is_trivial())
        throw CrossCheckFailure(
            "component-group torsion and H^1(I, X) disagree");
    if (report.good_reduction && !report.component_group.is_torsion_free())
        throw CrossCheckFailure(
            "good reduction produced a component group with torsion");
    return report;
}

} // namespace torus
