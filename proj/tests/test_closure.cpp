#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

#include "rrtk/closure.hpp"

using namespace rrtk;
using rrtest::ideal;
using rrtest::submodule;

namespace {
const MonomialIdeal kClassic = ideal(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
}

TEST_CASE("general closure on principal data") {
    const QuotientPresentation r_only = QuotientPresentation::trivial(2);
    // I = (x), W = (x): every chain term is (x^{k+2} : x^k) = (x^2)
    const ClosureResult r = rr_closure_general(ideal(2, {{1, 0}}),
                                               submodule(2, {ideal(2, {{1, 0}})}), r_only);
    CHECK(r.value == submodule(2, {ideal(2, {{2, 0}})}));
    CHECK(r.certified);
    REQUIRE(r.stabilized_at.has_value());
    CHECK(*r.stabilized_at == 1);
}

TEST_CASE("general closure of a two-generator target") {
    // I = (x,y), W = (x): the closure is (x^2, xy)
    const ClosureResult r =
        rr_closure_general(ideal(2, {{1, 0}, {0, 1}}), submodule(2, {ideal(2, {{1, 0}})}),
                           QuotientPresentation::trivial(2));
    CHECK(r.value == submodule(2, {ideal(2, {{2, 0}, {1, 1}})}));
    CHECK(r.certified);
}

TEST_CASE("general closure of the zero target is zero over E = R") {
    const ClosureResult r = rr_closure_general(
        ideal(2, {{1, 0}}), MonomialSubmodule::zero(2, 1), QuotientPresentation::trivial(2));
    CHECK(r.value.is_zero());
}

TEST_CASE("degenerate scaling ideals are rejected") {
    const QuotientPresentation p = QuotientPresentation::trivial(2);
    CHECK_THROWS_AS(rr_closure_general(MonomialIdeal::zero(2), MonomialSubmodule::zero(2, 1), p),
                    error);
    CHECK_THROWS_AS(rr_closure_general(MonomialIdeal::unit(2), MonomialSubmodule::zero(2, 1), p),
                    error);
    CHECK_THROWS_AS(rr_power(kClassic, 1, p, 0, 5), error);
    CHECK_THROWS_AS(rr_power(kClassic, 1, p, 3, 2), error);
}

TEST_CASE("the classic quartic gains x^2 y^2") {
    const ClosureResult r = rr_ideal(kClassic);
    CHECK(r.value ==
          submodule(2, {ideal(2, {{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}})}));
    CHECK(r.certified);
}

TEST_CASE("principal and maximal ideals are closed") {
    CHECK(rr_ideal(ideal(2, {{1, 0}})).value == submodule(2, {ideal(2, {{1, 0}})}));
    CHECK(rr_power(ideal(2, {{1, 0}}), 3, QuotientPresentation::trivial(2)).value ==
          submodule(2, {ideal(2, {{3, 0}})}));
    CHECK(rr_ideal(ideal(2, {{1, 0}, {0, 1}})).value ==
          submodule(2, {ideal(2, {{1, 0}, {0, 1}})}));
    // (x^2, xy) is closed: (I^2 : I) = I keeps the chain constant
    CHECK(rr_ideal(ideal(2, {{2, 0}, {1, 1}})).value ==
          submodule(2, {ideal(2, {{2, 0}, {1, 1}})}));
}

TEST_CASE("n = 0 yields all of E by convention") {
    const QuotientPresentation p(submodule(2, {ideal(2, {{0, 2}}), MonomialIdeal::zero(2)}));
    const ClosureResult r = rr_power(kClassic, 0, p);
    CHECK(r.value == MonomialSubmodule::full(2, 2));
    CHECK(r.certified);
}

TEST_CASE("chains are monotone and the filtration decreases (property)") {
    rrtest::Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 1 + static_cast<int>(rng(3));
        const int r = 1 + static_cast<int>(rng(2));
        const MonomialIdeal i = rng.proper_ideal(d, 4, 4);
        std::vector<MonomialIdeal> coords;
        for (int k = 0; k < r; ++k)
            coords.push_back(rng(2) == 0 ? MonomialIdeal::zero(d) : rng.proper_ideal(d, 3, 3));
        const QuotientPresentation p{submodule(d, coords)};

        ClosureResult prev = rr_power(i, 1, p);
        for (std::size_t k = 0; k + 1 < prev.chain.size(); ++k)
            CHECK(submodule_leq(prev.chain[k], prev.chain[k + 1]));
        for (int n = 2; n <= 4; ++n) {
            const ClosureResult cur = rr_power(i, n, p);
            CHECK(submodule_leq(cur.value, prev.value));   // decreasing filtration
            CHECK(submodule_leq(power_scale_preimage(i, n, p), cur.value));
            prev = cur;
        }
    }
}

TEST_CASE("I E <= closure(I) E <= closure of I in E (property)") {
    rrtest::Rng rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 1 + static_cast<int>(rng(3));
        const int r = 1 + static_cast<int>(rng(2));
        const MonomialIdeal i = rng.proper_ideal(d, 4, 4);
        std::vector<MonomialIdeal> coords;
        for (int k = 0; k < r; ++k)
            coords.push_back(rng(2) == 0 ? MonomialIdeal::zero(d) : rng.proper_ideal(d, 3, 3));
        const QuotientPresentation p{submodule(d, coords)};
        const MonomialIdeal i_tilde = rr_ideal(i).value.coord(0);

        const MonomialSubmodule ie = power_scale_preimage(i, 1, p);
        const MonomialSubmodule tilde_ie =
            submodule_sum(submodule_scale(i_tilde, MonomialSubmodule::full(d, r)),
                          p.relations());
        const MonomialSubmodule closure = rr_power(i, 1, p).value;
        CHECK(submodule_leq(ie, tilde_ie));
        CHECK(submodule_leq(tilde_ie, closure));
    }
}

TEST_CASE("colon identity: n = m collapses to all of E") {
    const QuotientPresentation p(submodule(2, {ideal(2, {{0, 2}})}));
    const ColonIdentityReport r = colon_identity_check(kClassic, p, 2, 2);
    CHECK(r.all_equal);
    CHECK(r.shifted_closure == MonomialSubmodule::full(2, 1));
}

TEST_CASE("colon identity on principal and classic ideals") {
    const QuotientPresentation r_only = QuotientPresentation::trivial(2);
    const ColonIdentityReport principal =
        colon_identity_check(ideal(2, {{1, 0}}), r_only, 3, 1);
    CHECK(principal.all_equal);
    CHECK(principal.shifted_closure == submodule(2, {ideal(2, {{2, 0}})}));

    const ColonIdentityReport classic = colon_identity_check(kClassic, r_only, 2, 1);
    CHECK(classic.all_equal);
    CHECK(classic.closures_certified);

    CHECK_THROWS_AS(colon_identity_check(kClassic, r_only, 1, 2), error);
    CHECK_THROWS_AS(colon_identity_check(kClassic, r_only, 1, 0), error);
}

TEST_CASE("colon identity holds across small ranges (property)") {
    rrtest::Rng rng(47);
    for (int trial = 0; trial < 12; ++trial) {
        const int d = 1 + static_cast<int>(rng(2));
        const int r = 1 + static_cast<int>(rng(2));
        const MonomialIdeal i = rng.proper_ideal(d, 3, 3);
        std::vector<MonomialIdeal> coords;
        for (int k = 0; k < r; ++k)
            coords.push_back(rng(2) == 0 ? MonomialIdeal::zero(d) : rng.proper_ideal(d, 2, 3));
        const QuotientPresentation p{submodule(d, coords)};
        for (int n = 1; n <= 5; ++n)
            for (int m = 1; m <= n; ++m)
                CHECK(colon_identity_check(i, p, n, m).all_equal);
    }
}
