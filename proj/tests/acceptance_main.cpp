// Acceptance suite: one check per shipped guarantee, one PASS/FAIL line
// each, exact comparisons throughout.  Returns nonzero if anything fails.

#include "torus/catalog.hpp"
#include "torus/errors.hpp"
#include "torus/global.hpp"
#include "torus/io.hpp"
#include "torus/isogeny.hpp"
#include "torus/local.hpp"

#include "test_support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace torus;
using namespace torus::testing;

namespace {

struct Failure {
    std::string message;
};

void require(bool condition, const std::string& message) {
    if (!condition)
        throw Failure{message};
}

std::vector<std::size_t> divisors_of(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t t = 1; t <= n; ++t)
        if (n % t == 0)
            out.push_back(t);
    return out;
}

// ---- criterion 1: norm-one torus, totally ramified: factor n, group Z/n

void criterion_norm_torus() {
    for (std::size_t n = 2; n <= 12; ++n)
        for (long q : {2, 3, 5}) {
            // any Frobenius representative is legal here; use two
            for (std::size_t f : {std::size_t(0), n / 2}) {
                auto start = std::chrono::steady_clock::now();
                FiniteGroup g = FiniteGroup::cyclic(n);
                LocalTorusData data(norm_one_torus(g, 1), Subgroup::whole(g),
                                    f, q);
                std::ostringstream tag;
                tag << "n=" << n << " q=" << q << " f=" << f;
                require(local_shyr_factor(data) == n,
                        "factor != n at " + tag.str());
                require(component_group(data) == FinAbGroup(0, {Int(n)}),
                        "component group != Z/n at " + tag.str());
                auto elapsed = std::chrono::steady_clock::now() - start;
                require(elapsed < std::chrono::seconds(1),
                        "runtime above one second at " + tag.str());
            }
        }
}

// ---- criterion 2: mixed ramification gives the ramification index

void criterion_ramification_index() {
    for (std::size_t e : {1, 2, 3, 4})
        for (std::size_t f : {1, 2, 3, 4}) {
            std::size_t n = e * f;
            FiniteGroup g = FiniteGroup::cyclic(n);
            Subgroup inertia = Subgroup::generated_by(g, {f % n});
            require(inertia.size() == e, "inertia size setup");
            LocalTorusData data(norm_one_torus(g, n > 1 ? 1 : 0), inertia,
                                1 % n, 5);
            std::ostringstream tag;
            tag << "e=" << e << " f=" << f;
            require(local_shyr_factor(data) == e,
                    "factor != e at " + tag.str());
        }
}

// ---- criterion 3: regular representations have free component groups and
//      trivial H^1 for every group of order <= 8

void criterion_weil_freeness() {
    for (auto& [name, g] : groups_up_to_order_8()) {
        GaloisLattice reg = weil_restriction(g);
        for (const Subgroup& inertia : all_subgroups(g)) {
            if (!inertia.is_normal())
                continue;
            require(h1(reg, inertia).is_trivial(),
                    "H^1(I, Z[G]) != 0 for " + name);
            for (std::size_t f : frobenius_candidates(g, inertia)) {
                LocalTorusData data(reg, inertia, f, 3);
                require(component_group(data).torsion_order() == 1,
                        "torsion in the component group for " + name);
            }
        }
    }
}

// ---- criterion 4: 200 randomized unramified-acting instances give 1

void criterion_unramified_factor_one() {
    Rng rng(46410);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = rand_range(rng, 1, 8);
        std::size_t d = rand_range(rng, 1, 4);
        auto divisors = divisors_of(n);
        std::size_t t = divisors[rand_range(rng, 0, divisors.size() - 1)];
        GaloisLattice l = random_cyclic_lattice(rng, n, d, t);
        Subgroup inertia = Subgroup::generated_by(l.group, {t % n});
        LocalTorusData data(l, inertia, n > 1 ? 1 : 0, rand_range(rng, 2, 9));
        require(check_good_reduction(data), "setup: inertia must act trivially");
        require(local_shyr_factor(data) == 1,
                "unramified factor != 1 at trial " + std::to_string(trial));
    }
}

// shared instance generator for criteria 5 and 8: possibly-ramified random
// cyclic data with |I| <= 6, d <= 4
std::vector<std::pair<GaloisLattice, Subgroup>> ramified_suite() {
    Rng rng(59049);
    std::vector<std::pair<GaloisLattice, Subgroup>> suite;
    while (suite.size() < 200) {
        std::size_t n = rand_range(rng, 1, 8);
        std::size_t d = rand_range(rng, 1, 4);
        auto divisors = divisors_of(n);
        std::size_t t = divisors[rand_range(rng, 0, divisors.size() - 1)];
        if (n / t > 6)
            continue; // |I| <= 6
        GaloisLattice l = random_cyclic_lattice(rng, n, d, n);
        Subgroup inertia = Subgroup::generated_by(l.group, {t % n});
        suite.emplace_back(std::move(l), std::move(inertia));
    }
    return suite;
}

// ---- criterion 5: torsion-freeness of the component group iff H^1 = 0

void criterion_torsion_h1_crosscheck() {
    int nontrivial = 0;
    for (auto& [lattice, inertia] : ramified_suite()) {
        std::size_t n = lattice.group.order();
        LocalTorusData data(lattice, inertia, n > 1 ? 1 : 0, 3);
        bool torsion_free = local_shyr_factor(data) == 1;
        bool h1_trivial = h1(lattice, inertia).is_trivial();
        require(torsion_free == h1_trivial, "torsion/H^1 cross-check failed");
        if (!torsion_free)
            ++nontrivial;
    }
    require(nontrivial > 10, "suite never exercised the torsion side");
}

// ---- criterion 6: point-count identity under good reduction

void criterion_point_count_identity() {
    std::vector<std::pair<std::string, LocalTorusData>> cases;
    for (std::size_t n = 1; n <= 6; ++n)
        for (long q : {2, 3, 4, 5, 7}) {
            FiniteGroup g = FiniteGroup::cyclic(n);
            std::size_t f = n > 1 ? 1 : 0;
            for (std::size_t d : {0, 1, 3})
                cases.emplace_back(
                    "split", LocalTorusData(split_torus(g, d),
                                            Subgroup::trivial(g), f, q));
            cases.emplace_back("weil",
                               LocalTorusData(weil_restriction(g),
                                              Subgroup::trivial(g), f, q));
            if (n > 1)
                cases.emplace_back(
                    "norm_one",
                    LocalTorusData(norm_one_torus(g, 1),
                                   Subgroup::trivial(g), f, q));
        }
    for (auto& [name, data] : cases) {
        require(check_good_reduction(data), "setup: " + name);
        Int count = point_count_good_reduction(data);
        Rational lhs =
            Rational(count) / Rational(boost::multiprecision::pow(
                                  data.residue_q(),
                                  unsigned(data.lattice().rank)));
        require(lhs == 1 / artin_l_factor(data, 1),
                "identity failed for " + name);
    }

    // the unramified quadratic norm-one torus at q = 3, against a brute
    // force count of norm-1 elements of the nine-element field
    int brute = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if ((a != 0 || b != 0) && (a * a + b * b) % 3 == 1)
                ++brute;
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    LocalTorusData quad(norm_one_torus(c2, 1), Subgroup::trivial(c2), 1, 3);
    require(point_count_good_reduction(quad) == brute,
            "norm count over F_9 disagrees");
    require(brute == 4, "brute-force norm count is not 4");
}

// ---- criterion 7: isogeny does not preserve the local factor

void criterion_isogeny_non_invariance() {
    for (std::size_t n = 2; n <= 8; ++n) {
        FiniteGroup g = FiniteGroup::cyclic(n);
        GaloisLattice a = weil_restriction(g);
        GaloisLattice b = direct_sum(norm_one_torus(g, 1), split_torus(g, 1));
        require(isogenous(a, b), "regular vs norm-one+trivial not isogenous");
        Subgroup whole = Subgroup::whole(g);
        require(local_shyr_factor(LocalTorusData(a, whole, 0, 3)) == 1,
                "regular lattice factor != 1");
        require(local_shyr_factor(LocalTorusData(b, whole, 0, 3)) == n,
                "norm-one+trivial factor != n");
    }
}

// ---- criterion 8: the two good-reduction companions are always isogenous

void criterion_good_reduction_companions() {
    for (auto& [name, g] : groups_up_to_order_8()) {
        std::vector<GaloisLattice> lattices{split_torus(g, 2),
                                            weil_restriction(g)};
        for (const GaloisLattice& l : lattices)
            for (const Subgroup& h : all_subgroups(g)) {
                if (!h.is_normal())
                    continue;
                require(good_reduction_parts_isogenous(l, h),
                        "companions differ on " + name);
            }
    }
    for (auto& [lattice, inertia] : ramified_suite())
        require(good_reduction_parts_isogenous(lattice, inertia),
                "companions differ on a randomized instance");
}

// ---- criterion 9: global assembly in the function-field case

void criterion_global_assembly() {
    for (std::size_t n : {2, 3, 4}) {
        GlobalTorusSpec spec;
        spec.field_case = GlobalCase::function_field;
        spec.constants_q = 3;
        spec.genus = 0;
        spec.lattice = norm_one_torus(FiniteGroup::cyclic(n), 1);
        spec.places.push_back(PlaceData{"p", Subgroup::whole(spec.lattice.group),
                                        Subgroup::whole(spec.lattice.group), 0,
                                        3});
        SymbolicValue v = shyr_invariant(spec);
        require(v.coefficient ==
                    Rational(Int(n) * boost::multiprecision::pow(
                                          Int(3), unsigned(n - 1))),
                "coefficient != n 3^{n-1} at n=" + std::to_string(n));
        require(v.lnq_exponent == 0, "lnq exponent != 0");
        require(!v.archimedean_unevaluated, "archimedean flag set in case F");
    }

    // rank-0 split torus, genus 1, no ramification: every prefactor trivial
    GlobalTorusSpec one;
    one.field_case = GlobalCase::function_field;
    one.constants_q = 3;
    one.genus = 1;
    one.lattice = split_torus(FiniteGroup::cyclic(2), 0);
    SymbolicValue v = shyr_invariant(one);
    require(v.coefficient == Rational(1), "trivial spec coefficient != 1");
    require(v.lnq_exponent == 0, "trivial spec lnq exponent != 0");
    require(v.sqrt_disc_exponent == 0, "trivial spec disc exponent != 0");

    // sanity on the symbolic contract for number fields
    GlobalTorusSpec ncase;
    ncase.field_case = GlobalCase::number_field;
    ncase.discriminant = -4;
    ncase.lattice = norm_one_torus(FiniteGroup::cyclic(2), 1);
    SymbolicValue nv = shyr_invariant(ncase);
    require(nv.archimedean_unevaluated, "case N must stay symbolic");
    require(nv.sqrt_disc_exponent == -1, "case N disc exponent");
}

// ---- criterion 10: engine properties

void criterion_engine_properties() {
    Rng rng(778899);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t rows = rand_range(rng, 0, 8);
        std::size_t cols = rand_range(rng, 0, 8);
        IntMatrix a = random_matrix(rng, rows, cols, 100);
        SnfDecomposition snf = smith_normal_form(a);
        require(snf.u * a * snf.v == snf.d, "UAV != D");
        Int du = snf.u.determinant();
        Int dv = snf.v.determinant();
        require(du == 1 || du == -1, "U not unimodular");
        require(dv == 1 || dv == -1, "V not unimodular");
        const std::size_t nmin = std::min(rows, cols);
        for (std::size_t i = 0; i + 1 < nmin; ++i) {
            require(snf.d(i, i) >= 0, "negative invariant");
            if (snf.d(i, i) != 0)
                require(snf.d(i + 1, i + 1) % snf.d(i, i) == 0,
                        "divisibility chain broken");
            else
                require(snf.d(i + 1, i + 1) == 0, "zero before nonzero");
        }
    }

    int nonsingular = 0;
    while (nonsingular < 60) {
        std::size_t n = rand_range(rng, 1, 6);
        IntMatrix a = random_matrix(rng, n, n, 9);
        Int det = cofactor_determinant(a);
        if (det == 0)
            continue;
        ++nonsingular;
        require(cokernel_structure(a).torsion_order() ==
                    (det < 0 ? Int(-det) : det),
                "torsion order != |det|");
        std::vector<Int> expected = invariant_factors_by_minors(a);
        std::vector<Int> got;
        for (const Int& d : smith_diagonal(a))
            if (d != 0)
                got.push_back(d);
        require(got == expected, "invariant factors disagree with minors");
    }
}

struct Criterion {
    std::string name;
    std::function<void()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1 norm-torus: factor n and component Z/n (n<=12, q in {2,3,5})",
         criterion_norm_torus},
        {"2 ramification index e for cyclic e*f (e,f <= 4)",
         criterion_ramification_index},
        {"3 regular representation free/H1-trivial for all groups of order <= 8",
         criterion_weil_freeness},
        {"4 trivially-acting inertia gives factor 1 (200 randomized)",
         criterion_unramified_factor_one},
        {"5 torsion iff nonvanishing H1 (200 randomized)",
         criterion_torsion_h1_crosscheck},
        {"6 point-count identity, with the F_9 brute-force count",
         criterion_point_count_identity},
        {"7 isogenous pair with local factors 1 vs n (n <= 8)",
         criterion_isogeny_non_invariance},
        {"8 trace image and invariants sublattice always isogenous",
         criterion_good_reduction_companions},
        {"9 global assembly, function-field fixtures",
         criterion_global_assembly},
        {"10 engine: SNF contracts and gcd-of-minors oracle (500 random)",
         criterion_engine_properties},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            c.run();
            std::cout << "PASS  " << c.name << "\n";
        } catch (const Failure& f) {
            ++failures;
            std::cout << "FAIL  " << c.name << " — " << f.message << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  " << c.name << " — unexpected error: "
                      << e.what() << "\n";
        }
    }
    if (failures == 0)
        std::cout << "acceptance: all " << criteria.size()
                  << " criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " of " << criteria.size()
                  << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
