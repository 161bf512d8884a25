#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

#include "rrtk/associated_primes.hpp"

#include <algorithm>

using namespace rrtk;
using rrtest::ideal;
using rrtest::submodule;

namespace {
const MonomialIdeal kClassic = ideal(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});

MonomialPrime prime(int d, std::vector<int> vars) { return MonomialPrime{d, std::move(vars)}; }
}

TEST_CASE("ass of cyclic quotients") {
    CHECK(ass_cyclic(ideal(2, {{3, 0}})) == PrimeSet{prime(2, {0})});
    CHECK(ass_cyclic(ideal(2, {{2, 0}, {1, 1}})) == PrimeSet{prime(2, {0}), prime(2, {0, 1})});
    CHECK(ass_cyclic(ideal(2, {{1, 1}})) == PrimeSet{prime(2, {0}), prime(2, {1})});
    CHECK(ass_cyclic(MonomialIdeal::zero(2)) == PrimeSet{prime(2, {})});
    CHECK_THROWS_AS(ass_cyclic(MonomialIdeal::unit(2)), error);
}

TEST_CASE("ass of ideal subquotients") {
    // (x^n)/(x^{n+1}) is R/(x) shifted
    CHECK(ass_ideal_subquotient(ideal(1, {{2}}), ideal(1, {{3}})) == PrimeSet{prime(1, {0})});
    // R/(x^2, xy) through the subquotient route
    CHECK(ass_ideal_subquotient(MonomialIdeal::unit(2), ideal(2, {{2, 0}, {1, 1}})) ==
          PrimeSet{prime(2, {0}), prime(2, {0, 1})});
    // (x)/(x^2, xy) is R/(x, y) shifted by x
    CHECK(ass_ideal_subquotient(ideal(2, {{1, 0}}), ideal(2, {{2, 0}, {1, 1}})) ==
          PrimeSet{prime(2, {0, 1})});
    // torsion-free piece: Ass of a nonzero ideal is the zero prime
    CHECK(ass_ideal_subquotient(ideal(2, {{1, 0}}), MonomialIdeal::zero(2)) ==
          PrimeSet{prime(2, {})});
    CHECK_THROWS_AS(ass_ideal_subquotient(ideal(2, {{1, 0}}), ideal(2, {{1, 0}})), error);
    CHECK_THROWS_AS(ass_ideal_subquotient(ideal(2, {{2, 0}}), ideal(2, {{1, 0}})), error);
}

TEST_CASE("the two Ass algorithms agree on cyclic quotients (property)") {
    rrtest::Rng rng(61);
    for (int trial = 0; trial < 80; ++trial) {
        const int d = 1 + static_cast<int>(rng(3));
        const MonomialIdeal v = rng.proper_ideal(d, 4, 4);
        CHECK(ass_cyclic(v) == ass_ideal_subquotient(MonomialIdeal::unit(d), v));
    }
}

TEST_CASE("ass of module quotients") {
    // F/[(x^2);(y)] = R/(x^2) + R/(y)
    CHECK(ass_module_quotient(MonomialSubmodule::full(2, 2),
                              submodule(2, {ideal(2, {{2, 0}}), ideal(2, {{0, 1}})})) ==
          PrimeSet{prime(2, {0}), prime(2, {1})});
    const MonomialSubmodule w = submodule(2, {ideal(2, {{1, 1}})});
    CHECK_THROWS_AS(ass_module_quotient(w, w), error);
    CHECK(ass_module_quotient(MonomialSubmodule::full(2, 1),
                              submodule(2, {ideal(2, {{2, 0}, {1, 1}})})) ==
          ass_cyclic(ideal(2, {{2, 0}, {1, 1}})));
}

TEST_CASE("closure-power Ass sequence on simple ideals") {
    const QuotientPresentation r_only = QuotientPresentation::trivial(2);
    AssSequenceReport r = ass_rr_sequence(ideal(2, {{1, 0}}), r_only, 5);
    for (int n = 1; n <= 5; ++n) CHECK(r.at(n) == PrimeSet{prime(2, {0})});
    CHECK(r.increasing);
    REQUIRE(r.stabilization_candidate.has_value());
    CHECK(*r.stabilization_candidate == 1);
    CHECK(r.stable_set == PrimeSet{prime(2, {0})});

    r = ass_rr_sequence(ideal(2, {{2, 0}, {1, 1}}), r_only, 6);
    CHECK(r.increasing);
    CHECK(r.stable_set == PrimeSet{prime(2, {0}), prime(2, {0, 1})});

    r = ass_rr_sequence(kClassic, r_only, 5);
    CHECK(r.increasing);
    CHECK(r.stabilization_candidate.has_value());
    CHECK(r.closure_certified);

    CHECK_THROWS_AS(ass_rr_sequence(MonomialIdeal::unit(2), r_only, 5), error);
    CHECK_THROWS_AS(ass_rr_sequence(ideal(2, {{1, 0}}), r_only, 1), error);
}

TEST_CASE("ordinary-power Ass sequence and the closure inclusion") {
    const QuotientPresentation r_only = QuotientPresentation::trivial(2);
    AssSequenceReport r = ass_power_sequence(ideal(2, {{1, 0}}), r_only, 5);
    for (int n = 1; n <= 5; ++n) CHECK(r.at(n) == PrimeSet{prime(2, {0})});

    r = ass_power_sequence(ideal(2, {{2, 0}, {1, 1}}), r_only, 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(r.at(n) == PrimeSet{prime(2, {0}), prime(2, {0, 1})});
}

TEST_CASE("stable set of the closure sequence sits inside the power stable set (property)") {
    rrtest::Rng rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 1 + static_cast<int>(rng(3));
        const int rk = 1 + static_cast<int>(rng(2));
        const MonomialIdeal i = rng.proper_ideal(d, 4, 4);
        std::vector<MonomialIdeal> coords;
        for (int k = 0; k < rk; ++k)
            coords.push_back(rng(2) == 0 ? MonomialIdeal::zero(d) : rng.proper_ideal(d, 3, 3));
        const QuotientPresentation p{submodule(d, coords)};
        const AssSequenceReport closure_seq = ass_rr_sequence(i, p, 6);
        const AssSequenceReport power_seq = ass_power_sequence(i, p, 6);
        CHECK(closure_seq.increasing);
        CHECK(std::includes(power_seq.stable_set.begin(), power_seq.stable_set.end(),
                            closure_seq.stable_set.begin(), closure_seq.stable_set.end()));
    }
}

TEST_CASE("successive quotient sequence") {
    const QuotientPresentation r_only = QuotientPresentation::trivial(2);
    AssSequenceReport r = ass_successive_rr(ideal(2, {{1, 0}}), r_only, 5);
    for (int n = 1; n <= 5; ++n) CHECK(r.at(n) == PrimeSet{prime(2, {0})});
    CHECK(r.increasing);

    r = ass_successive_rr(ideal(2, {{2, 0}, {1, 1}}), r_only, 6);
    CHECK(r.increasing);
    CHECK(r.degenerate_indices.empty());

    // nilpotent action: all closures equal E, every index degenerate
    const QuotientPresentation p(submodule(1, {ideal(1, {{2}})}));
    r = ass_successive_rr(ideal(1, {{1}}), p, 3);
    CHECK(r.degenerate_indices == std::vector<int>{1, 2, 3});
    for (int n = 1; n <= 3; ++n) CHECK(r.at(n).empty());
}

TEST_CASE("stable equality of the two sequences over E = R") {
    StableAssEqualityReport r = stable_ass_equality_check(ideal(2, {{1, 0}}), 6);
    REQUIRE(r.found);
    CHECK(*r.equal_from == 1);

    r = stable_ass_equality_check(ideal(2, {{2, 0}, {1, 1}}), 6);
    REQUIRE(r.found);
    for (int n = *r.equal_from; n <= 6; ++n)
        CHECK(r.top.at(n) == r.successive.at(n));

    r = stable_ass_equality_check(ideal(2, {{1, 0}, {0, 1}}), 6);
    REQUIRE(r.found);
    for (int n = 1; n <= 6; ++n) CHECK(r.top.at(n) == PrimeSet{prime(2, {0, 1})});
}

TEST_CASE("grade positivity") {
    const QuotientPresentation r_only = QuotientPresentation::trivial(2);
    CHECK(grade_positive(ideal(2, {{1, 0}}), r_only));
    CHECK(grade_positive(kClassic, r_only));
    // E = R/(x): I = (x) sits inside the associated prime (x)
    const QuotientPresentation p(submodule(2, {ideal(2, {{1, 0}})}));
    CHECK_FALSE(grade_positive(ideal(2, {{1, 0}}), p));
    CHECK(grade_positive(ideal(2, {{1, 0}, {0, 1}}), p));
    CHECK_THROWS_AS(grade_positive(MonomialIdeal::unit(2), r_only), error);
}

TEST_CASE("eventual equality of closure and power") {
    const QuotientPresentation r_only = QuotientPresentation::trivial(2);
    EventualEqualityReport r = eventual_equality_check(ideal(2, {{1, 0}}), r_only, 6);
    REQUIRE(r.found);
    CHECK(*r.stable_from == 1);

    r = eventual_equality_check(kClassic, r_only, 10);
    REQUIRE(r.found);
    CHECK(*r.stable_from >= 2);  // the closure strictly enlarges I itself

    r = eventual_equality_check(ideal(2, {{2, 0}, {1, 1}}), r_only, 6);
    REQUIRE(r.found);
    CHECK(*r.stable_from == 1);

    const QuotientPresentation p(submodule(2, {ideal(2, {{1, 0}})}));
    CHECK_THROWS_AS(eventual_equality_check(ideal(2, {{1, 0}}), p, 6), error);
}

TEST_CASE("every reported prime has a witness annihilator (spot check)") {
    // re-verification is built into the colon search; poke the overlap case
    const MonomialIdeal v = ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 0, 3}});
    const PrimeSet via_decomp = ass_cyclic(v);
    const PrimeSet via_colon = ass_ideal_subquotient(MonomialIdeal::unit(3), v);
    CHECK(via_decomp == via_colon);
    CHECK_FALSE(via_decomp.empty());
}
