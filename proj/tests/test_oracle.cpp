#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

#include "rrtk/oracle.hpp"

using namespace rrtk;
using rrtest::ideal;
using rrtest::mono;
using rrtest::submodule;

namespace {
const MonomialIdeal kClassic = ideal(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});

ModuleElement el(std::vector<Exponent> e) { return {0, Monomial(std::move(e))}; }
}

TEST_CASE("truncation lists every member up to the degree bound") {
    TruncatedSet t = truncate(ideal(2, {{1, 0}}), 2);
    CHECK(t.members == std::set<ModuleElement>{el({1, 0}), el({2, 0}), el({1, 1})});
    CHECK(truncate(MonomialIdeal::zero(2), 4).members.empty());
    t = truncate(MonomialIdeal::unit(2), 1);
    CHECK(t.members == std::set<ModuleElement>{el({0, 0}), el({1, 0}), el({0, 1})});
}

TEST_CASE("monomial enumeration size") {
    CHECK(monomials_up_to(2, 3).size() == 10);   // C(5,2)
    CHECK(monomials_up_to(3, 12).size() == 455); // C(15,3)
    CHECK(monomials_up_to(2, -1).empty());
}

TEST_CASE("truncated colon agrees with the structural colon on its range") {
    const MonomialIdeal a = ideal(2, {{2, 0}});
    const TruncatedSet o = oracle_colon(truncate(a, 6), ideal(2, {{1, 0}}).gens());
    CHECK(o.degree_bound == 5);
    const TruncatedSet s = truncate(ideal_colon(a, ideal(2, {{1, 0}})), 5);
    CHECK(o.members == s.members);
}

TEST_CASE("closure chain oracle finds the extra generator of the classic ideal") {
    const OracleClosure oc =
        oracle_closure_chain(kClassic, 1, MonomialSubmodule::zero(2, 1), 12, 5);
    // x^2 y^2 enters at the first term, (I^2 : I)
    CHECK(oc.terms[0].contains(el({2, 2})));
    CHECK(oc.value.contains(el({2, 2})));
    // and the first term matches the structural chain on degrees <= 8
    const ClosureResult structural = rr_ideal(kClassic);
    const TruncatedSet s = truncate(structural.chain[0], oc.terms[0].degree_bound);
    CHECK(oc.terms[0].members == s.members);
}

TEST_CASE("annihilator enumeration recovers Ass(R/(x^2, xy))") {
    const OracleAssResult r = oracle_ass_cyclic(ideal(2, {{2, 0}, {1, 1}}), 4);
    REQUIRE(r.conclusive);
    CHECK(r.primes == PrimeSet{MonomialPrime{2, {0}}, MonomialPrime{2, {0, 1}}});
}

TEST_CASE("oracle Ass reports inconclusive instead of guessing") {
    const OracleAssResult r = oracle_ass_cyclic(ideal(2, {{6, 0}, {5, 5}, {0, 6}}), 3);
    CHECK_FALSE(r.conclusive);
    CHECK(r.required_degree > 3);
    const OracleAssResult retry =
        oracle_ass_cyclic(ideal(2, {{6, 0}, {5, 5}, {0, 6}}), r.required_degree);
    CHECK(retry.conclusive);
    CHECK(retry.primes == ass_cyclic(ideal(2, {{6, 0}, {5, 5}, {0, 6}})));
}

TEST_CASE("a corrupted colon is detected (negative control)") {
    const MonomialIdeal a = ideal(2, {{2, 0}, {1, 1}});
    const MonomialIdeal honest = ideal_colon(a, ideal(2, {{1, 0}}));
    // drop one generator of the honest answer
    std::vector<Monomial> gens = honest.gens();
    REQUIRE(gens.size() >= 2);
    gens.pop_back();
    const MonomialIdeal corrupted = MonomialIdeal::make(2, std::move(gens));
    const TruncatedSet o = oracle_colon(truncate(a, 8), ideal(2, {{1, 0}}).gens());
    const TruncatedSet s = truncate(corrupted, o.degree_bound);
    CHECK(o.members != s.members);
}

TEST_CASE("cross_check passes on hand instances and stays deterministic") {
    Instance inst;
    inst.vars = {"x", "y"};
    inst.ideal_I = kClassic;
    inst.rank = 1;
    inst.relations = MonomialSubmodule::zero(2, 1);
    const CrossCheckReport a = cross_check(inst, 12, 5);
    CHECK(a.all_agree);
    const CrossCheckReport b = cross_check(inst, 12, 5);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].op == b.entries[i].op);
        CHECK(a.entries[i].agree == b.entries[i].agree);
        CHECK(a.entries[i].used_degree == b.entries[i].used_degree);
    }
}

TEST_CASE("cross_check covers modules with relations") {
    Instance inst;
    inst.vars = {"x", "y"};
    inst.ideal_I = ideal(2, {{2, 0}, {1, 1}});
    inst.ideal_J = ideal(2, {{1, 0}});
    inst.rank = 2;
    inst.relations = submodule(2, {ideal(2, {{0, 2}}), MonomialIdeal::zero(2)});
    const CrossCheckReport r = cross_check(inst, 12, 6);
    CHECK(r.all_agree);
}

TEST_CASE("cross_check rejects degenerate input") {
    Instance inst;
    inst.vars = {"x"};
    inst.ideal_I = MonomialIdeal::unit(1);
    inst.rank = 1;
    inst.relations = MonomialSubmodule::zero(1, 1);
    CHECK_THROWS_AS(cross_check(inst, 12, 6), error);
}

TEST_CASE("cross_check over random instances (seeded)") {
    for (std::uint64_t seed = 500; seed < 512; ++seed) {
        const Instance inst = gen_random(seed, {3, 2, 3, 3, true, false});
        const CrossCheckReport r = cross_check(inst, 12, 6);
        INFO(print_instance(inst));
        CHECK(r.all_agree);
    }
}
