#pragma once

#include "rrtk/closure.hpp"

#include <set>

namespace rrtk {

using PrimeSet = std::set<MonomialPrime>;

/// Ass(R/M) for a proper monomial ideal M, via irreducible decomposition:
/// the radicals of the irredundant irreducible components. The zero ideal
/// gives the zero prime. Results are memoized process-wide.
PrimeSet ass_cyclic(const MonomialIdeal& M);

/// Ass(U/V) for monomial ideals V <= U, V != U, by bounded colon search:
/// the primes (V : m) over monomials m in U. The search box is the
/// componentwise maximum exponent of gens(V); a candidate with a saturated
/// coordinate is tested for membership in U on the representative with that
/// coordinate raised, which is exact because (V : m) depends only on the
/// componentwise min with the box and U is upward closed. Every returned
/// prime is re-verified against its witness.
PrimeSet ass_ideal_subquotient(const MonomialIdeal& U, const MonomialIdeal& V);

/// Ass(U/V) for monomial submodules V <= U coordinatewise: the union over
/// coordinates, using ass_cyclic where the top is the unit ideal and the
/// colon search elsewhere. U = V is rejected (the zero module).
PrimeSet ass_module_quotient(const MonomialSubmodule& U, const MonomialSubmodule& V);

/// One associated-prime sequence: the per-n prime sets together with the
/// monotonicity verdict and the window-based stabilization candidate.
/// `degenerate_indices` lists n whose subquotient was zero (contributing
/// the empty set). `closure_certified` is false when some underlying
/// closure hit the cap uncertified.
struct AssSequenceReport {
    std::vector<PrimeSet> per_n;  // index 0 holds n = 1
    bool increasing = false;
    std::optional<int> stabilization_candidate;
    PrimeSet stable_set;
    bool certified = false;
    bool closure_certified = false;
    std::vector<int> degenerate_indices;

    const PrimeSet& at(int n) const { return per_n.at(static_cast<std::size_t>(n - 1)); }
    int n_max() const { return static_cast<int>(per_n.size()); }
};

/// Ass(E / closure of I^n E) for n = 1..n_max.
AssSequenceReport ass_rr_sequence(const MonomialIdeal& I, const QuotientPresentation& P,
                                  int n_max, int window = kDefaultWindow, int cap = kDefaultCap);

/// Ass(E / I^n E) for n = 1..n_max (ordinary powers).
AssSequenceReport ass_power_sequence(const MonomialIdeal& I, const QuotientPresentation& P,
                                     int n_max);

/// Ass(closure of I^n E / closure of I^{n+1} E) for n = 1..n_max.
AssSequenceReport ass_successive_rr(const MonomialIdeal& I, const QuotientPresentation& P,
                                    int n_max, int window = kDefaultWindow,
                                    int cap = kDefaultCap);

/// For E = R: least n0 such that Ass(R / closure of I^n) equals
/// Ass(closure of I^n / closure of I^{n+1}) for every n in [n0, n_max].
struct StableAssEqualityReport {
    AssSequenceReport top;         // Ass R/closure(I^n)
    AssSequenceReport successive;  // Ass closure(I^n)/closure(I^{n+1})
    std::optional<int> equal_from;
    bool found = false;
};

StableAssEqualityReport stable_ass_equality_check(const MonomialIdeal& I, int n_max,
                                                  int window = kDefaultWindow,
                                                  int cap = kDefaultCap);

/// grade(I, E) > 0, i.e. I contains an element regular on E; for monomial
/// data this holds iff I is contained in no associated prime of E.
bool grade_positive(const MonomialIdeal& I, const QuotientPresentation& P);

/// Requires grade(I, E) > 0. Least n0 <= n_max with
/// closure of I^n E == I^n E for all n in [n0, n_max].
struct EventualEqualityReport {
    std::vector<bool> equal_at;  // index 0 holds n = 1
    std::optional<int> stable_from;
    bool found = false;
    bool closure_certified = false;
};

EventualEqualityReport eventual_equality_check(const MonomialIdeal& I,
                                               const QuotientPresentation& P, int n_max,
                                               int window = kDefaultWindow,
                                               int cap = kDefaultCap);

} // namespace rrtk
