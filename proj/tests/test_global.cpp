#include "torus/global.hpp"

#include "torus/catalog.hpp"
#include "torus/errors.hpp"
#include "test_support.hpp"

#include "doctest.h"

using namespace torus;
using namespace torus::testing;

namespace {

GlobalTorusSpec function_field_spec(GaloisLattice lattice, long q, long genus) {
    GlobalTorusSpec spec;
    spec.field_case = GlobalCase::function_field;
    spec.constants_q = q;
    spec.genus = genus;
    spec.lattice = std::move(lattice);
    return spec;
}

PlaceData totally_ramified_place(const GlobalTorusSpec& spec,
                                 const std::string& label, long q) {
    return PlaceData{label, Subgroup::whole(spec.lattice.group),
                     Subgroup::whole(spec.lattice.group), 0, q};
}

} // namespace

TEST_CASE("finite part of the global invariant") {
    SUBCASE("no listed places: empty product") {
        GlobalTorusSpec spec = function_field_spec(
            split_torus(FiniteGroup::cyclic(2), 3), 3, 0);
        CHECK(finite_part(spec) == 1);
    }
    SUBCASE("one totally ramified norm-one place contributes n") {
        for (std::size_t n : {2, 3, 5}) {
            GlobalTorusSpec spec = function_field_spec(
                norm_one_torus(FiniteGroup::cyclic(n), 1), 3, 0);
            spec.places.push_back(totally_ramified_place(spec, "p1", 3));
            CHECK(finite_part(spec) == n);
        }
    }
    SUBCASE("two places multiply") {
        // global group C6; one place sees the order-2 inertia, another the
        // order-3 one, each through its own decomposition subgroup
        FiniteGroup c6 = FiniteGroup::cyclic(6);
        GlobalTorusSpec spec =
            function_field_spec(norm_one_torus(c6, 1), 2, 0);
        Subgroup d1 = Subgroup::whole(c6);
        Subgroup i1 = Subgroup::generated_by(c6, {3}); // order 2
        Subgroup i2 = Subgroup::generated_by(c6, {2}); // order 3
        spec.places.push_back(PlaceData{"p1", d1, i1, 1, 5});
        spec.places.push_back(PlaceData{"p2", d1, i2, 1, 7});
        Int e1 = local_shyr_factor(place_local_data(spec, spec.places[0]));
        Int e2 = local_shyr_factor(place_local_data(spec, spec.places[1]));
        CHECK(e1 == 2);
        CHECK(e2 == 3);
        CHECK(finite_part(spec) == e1 * e2);
    }
    SUBCASE("order of places does not matter, unramified places are free") {
        FiniteGroup c4 = FiniteGroup::cyclic(4);
        GlobalTorusSpec spec =
            function_field_spec(norm_one_torus(c4, 1), 3, 1);
        Subgroup whole = Subgroup::whole(c4);
        spec.places.push_back(PlaceData{"a", whole, whole, 0, 3});
        spec.places.push_back(
            PlaceData{"b", whole, Subgroup::generated_by(c4, {2}), 1, 9});
        Int straight = finite_part(spec);
        std::swap(spec.places[0], spec.places[1]);
        CHECK(finite_part(spec) == straight);
        // tack on an unramified place; the product must not move
        spec.places.push_back(
            PlaceData{"c", whole, Subgroup::trivial(c4), 1, 27});
        CHECK(finite_part(spec) == straight);
    }
    SUBCASE("Weil-restriction lattice: finite part 1 whatever the places") {
        FiniteGroup c8 = FiniteGroup::cyclic(8);
        GlobalTorusSpec spec = function_field_spec(weil_restriction(c8), 2, 2);
        Subgroup whole = Subgroup::whole(c8);
        spec.places.push_back(PlaceData{"a", whole, whole, 0, 2});
        spec.places.push_back(
            PlaceData{"b", whole, Subgroup::generated_by(c8, {4}), 1, 4});
        spec.places.push_back(
            PlaceData{"c", Subgroup::generated_by(c8, {2}),
                      Subgroup::generated_by(c8, {4}), 2, 8});
        CHECK(finite_part(spec) == 1);
    }
    SUBCASE("errors carry the place label") {
        FiniteGroup c4 = FiniteGroup::cyclic(4);
        GlobalTorusSpec spec = function_field_spec(split_torus(c4, 1), 3, 0);
        spec.places.push_back(PlaceData{"bad-q", Subgroup::whole(c4),
                                        Subgroup::whole(c4), 0, 1});
        try {
            finite_part(spec);
            FAIL("expected a validation error");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("bad-q") != std::string::npos);
        }
    }
}

TEST_CASE("pole order equals the invariants rank") {
    SUBCASE("split torus of rank d") {
        for (std::size_t d : {0, 1, 4})
            CHECK(pole_order(function_field_spec(
                      split_torus(FiniteGroup::cyclic(3), d), 2, 0)) == d);
    }
    SUBCASE("norm-one lattice has no invariants") {
        for (std::size_t n : {2, 3, 6})
            CHECK(pole_order(function_field_spec(
                      norm_one_torus(FiniteGroup::cyclic(n), 1), 2, 0)) == 0);
    }
    SUBCASE("regular representation fixes only the norm line") {
        for (auto& [name, g] : groups_up_to_order_8()) {
            CAPTURE(name);
            CHECK(pole_order(function_field_spec(weil_restriction(g), 2, 0)) ==
                  1);
        }
    }
    SUBCASE("duality with coinvariants") {
        Rng rng(11);
        for (int trial = 0; trial < 15; ++trial) {
            std::size_t n = rand_range(rng, 1, 6);
            GaloisLattice l =
                random_cyclic_lattice(rng, n, rand_range(rng, 0, 4), n);
            GlobalTorusSpec spec = function_field_spec(l, 3, 1);
            CHECK(pole_order(spec) ==
                  coinvariants(l, Subgroup::whole(l.group))
                      .structure.free_rank());
        }
    }
}

TEST_CASE("global Shyr invariant, function-field case") {
    SUBCASE("split torus, genus g, no ramified places") {
        for (long g : {0, 1, 3}) {
            for (std::size_t d : {1, 2}) {
                GlobalTorusSpec spec = function_field_spec(
                    split_torus(FiniteGroup::trivial(), d), 5, g);
                SymbolicValue v = shyr_invariant(spec);
                // q^{-d(g-1)}
                Rational expected =
                    g >= 1 ? Rational(1, boost::multiprecision::pow(
                                             Int(5), unsigned(d * (g - 1))))
                           : Rational(boost::multiprecision::pow(
                                 Int(5), unsigned(d * (1 - g))));
                CHECK(v.coefficient == expected);
                CHECK(v.lnq_exponent == -long(d));
                CHECK(v.sqrt_disc_exponent == 0);
                CHECK_FALSE(v.archimedean_unevaluated);
            }
        }
    }
    SUBCASE("norm-one fixture: coefficient n * q^{n-1}") {
        for (std::size_t n : {2, 3, 4}) {
            GlobalTorusSpec spec = function_field_spec(
                norm_one_torus(FiniteGroup::cyclic(n), 1), 3, 0);
            spec.places.push_back(totally_ramified_place(spec, "p", 3));
            SymbolicValue v = shyr_invariant(spec);
            CHECK(v.coefficient ==
                  Rational(Int(n) * boost::multiprecision::pow(
                                        Int(3), unsigned(n - 1))));
            CHECK(v.lnq_exponent == 0);
            CHECK_FALSE(v.archimedean_unevaluated);
        }
    }
    SUBCASE("rank zero, genus one, nothing ramified: exactly 1") {
        GlobalTorusSpec spec = function_field_spec(
            split_torus(FiniteGroup::cyclic(2), 0), 4, 1);
        SymbolicValue v = shyr_invariant(spec);
        CHECK(v.coefficient == Rational(1));
        CHECK(v.lnq_exponent == 0);
        CHECK(v.sqrt_disc_exponent == 0);
        CHECK_FALSE(v.archimedean_unevaluated);
    }
}

TEST_CASE("global Shyr invariant, number-field case") {
    GlobalTorusSpec spec;
    spec.field_case = GlobalCase::number_field;
    spec.discriminant = -4;
    spec.lattice = norm_one_torus(FiniteGroup::cyclic(2), 1);
    spec.places.push_back(PlaceData{"2", Subgroup::whole(spec.lattice.group),
                                    Subgroup::whole(spec.lattice.group), 0, 2});
    SymbolicValue v = shyr_invariant(spec);
    CHECK(v.coefficient == Rational(2)); // the finite part
    CHECK(v.sqrt_disc_exponent == -1);   // |disc|^{-d/2} with d = 1
    CHECK(v.lnq_exponent == 0);
    CHECK(v.archimedean_unevaluated);
}

TEST_CASE("global validation") {
    GlobalTorusSpec spec = function_field_spec(
        split_torus(FiniteGroup::cyclic(2), 1), 1, 0);
    CHECK_THROWS_AS(validate_global_spec(spec), ValidationError); // q < 2
    spec.constants_q = 2;
    spec.genus = -1;
    CHECK_THROWS_AS(validate_global_spec(spec), ValidationError);
    spec.genus = 0;
    CHECK_NOTHROW(validate_global_spec(spec));

    GlobalTorusSpec nspec;
    nspec.field_case = GlobalCase::number_field;
    nspec.discriminant = 0;
    nspec.lattice = split_torus(FiniteGroup::cyclic(2), 1);
    CHECK_THROWS_AS(validate_global_spec(nspec), ValidationError);
}
