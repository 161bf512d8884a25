#include "rrtk/associated_primes.hpp"

#include "grid.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace rrtk {

namespace {

std::mutex g_ass_mutex;
std::map<MonomialIdeal, PrimeSet> g_ass_cache;

MonomialPrime zero_prime(int dim) { return MonomialPrime{dim, {}}; }

// Subquotient colon search over the box [0, b] with b = max_exponents(V).
// For each candidate c the set S = { j : x_j * c in V } names the only
// possible prime; (V : c) = P_S iff c escapes the saturation of V by the
// variables outside S. Saturations for all 2^d variable subsets are
// precomputed. Membership of the candidate in U is tested on the raised
// representative.
PrimeSet colon_search(const MonomialIdeal& U, const MonomialIdeal& V) {
    const int d = V.dim();
    const std::vector<Exponent> bV = V.max_exponents();
    const std::vector<Exponent> bU = U.max_exponents();

    if (!detail::grid_cells(bV, std::size_t{1} << 26))
        throw error("ass_ideal_subquotient: search box too large");

    std::vector<int> all_vars(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) all_vars[static_cast<std::size_t>(j)] = j;

    // sat[mask] = (V : (product of variables outside mask)^inf): generators
    // of V with the exponents outside mask set to zero.
    const std::size_t nmask = std::size_t{1} << d;
    std::vector<detail::Grid> sat(nmask);
    for (std::size_t mask = 0; mask < nmask; ++mask) {
        std::vector<int> keep;
        for (int j = 0; j < d; ++j)
            if (mask & (std::size_t{1} << j)) keep.push_back(j);
        sat[mask] = detail::grid_from_ideal(localize_ideal(V, keep), bV);
    }
    const detail::Grid gV = detail::grid_from_ideal(V, bV);
    const detail::Grid gU = detail::grid_from_ideal(U, bU);

    PrimeSet out;
    std::vector<std::pair<MonomialPrime, Monomial>> witnesses;
    std::vector<Exponent> c(static_cast<std::size_t>(d), 0);
    std::vector<Exponent> probe(static_cast<std::size_t>(d), 0);
    std::vector<Exponent> rep(static_cast<std::size_t>(d), 0);
    bool more = true;
    while (more) {
        for (int j = 0; j < d; ++j)
            rep[static_cast<std::size_t>(j)] =
                c[static_cast<std::size_t>(j)] == bV[static_cast<std::size_t>(j)]
                    ? std::max(bV[static_cast<std::size_t>(j)], bU[static_cast<std::size_t>(j)])
                    : c[static_cast<std::size_t>(j)];
        if (gU.at_clamped(rep)) {
            std::size_t mask = 0;
            for (int j = 0; j < d; ++j) {
                probe = c;
                probe[static_cast<std::size_t>(j)] += 1;
                if (gV.at_clamped(probe)) mask |= std::size_t{1} << j;
            }
            if (!sat[mask].at_clamped(c)) {
                MonomialPrime p;
                p.dim = d;
                for (int j = 0; j < d; ++j)
                    if (mask & (std::size_t{1} << j)) p.vars.push_back(j);
                if (out.insert(p).second) witnesses.emplace_back(p, Monomial(c));
            }
        }
        more = false;
        for (int j = d - 1; j >= 0; --j) {
            if (c[static_cast<std::size_t>(j)] < bV[static_cast<std::size_t>(j)]) {
                ++c[static_cast<std::size_t>(j)];
                std::fill(c.begin() + j + 1, c.end(), 0);
                more = true;
                break;
            }
        }
    }

    // Witness property: each reported prime is exactly the annihilator of
    // its witness.
    for (const auto& [p, w] : witnesses) {
        if (ideal_colon(V, MonomialIdeal::principal(w)) != p.to_ideal())
            throw error("internal: associated-prime witness failed re-verification");
    }
    return out;
}

bool primes_increase(const std::vector<PrimeSet>& per_n) {
    for (std::size_t i = 0; i + 1 < per_n.size(); ++i)
        if (!std::includes(per_n[i + 1].begin(), per_n[i + 1].end(), per_n[i].begin(),
                           per_n[i].end()))
            return false;
    return true;
}

void finish_report(AssSequenceReport& r, int window) {
    r.increasing = primes_increase(r.per_n);
    const int n_max = static_cast<int>(r.per_n.size());
    r.stable_set = r.per_n.back();
    int n0 = n_max;
    while (n0 > 1 && r.per_n[static_cast<std::size_t>(n0 - 2)] == r.stable_set) --n0;
    if (n_max - n0 + 1 >= window) {
        r.stabilization_candidate = n0;
        r.certified = true;
    }
}

void validate_sequence_inputs(const MonomialIdeal& I, const QuotientPresentation& P, int n_max) {
    if (I.is_zero() || I.is_unit())
        throw error("associated-prime sequence: the ideal must be nonzero and proper");
    if (P.module_is_zero()) throw error("associated-prime sequence: the module is zero");
    if (I.dim() != P.dim()) throw error("associated-prime sequence: dimension mismatch");
    if (n_max < 2) throw error("associated-prime sequence: n_max must be at least 2");
}

} // namespace

PrimeSet ass_cyclic(const MonomialIdeal& M) {
    if (M.is_unit()) throw error("ass_cyclic: the unit ideal gives the zero module");
    if (M.is_zero()) return {zero_prime(M.dim())};
    {
        std::lock_guard<std::mutex> lock(g_ass_mutex);
        auto it = g_ass_cache.find(M);
        if (it != g_ass_cache.end()) return it->second;
    }
    PrimeSet out;
    for (const MonomialIdeal& q : irreducible_decomposition(M)) {
        MonomialPrime p;
        p.dim = M.dim();
        for (const Monomial& g : q.gens()) p.vars.push_back(g.support().front());
        std::sort(p.vars.begin(), p.vars.end());
        out.insert(std::move(p));
    }
    std::lock_guard<std::mutex> lock(g_ass_mutex);
    return g_ass_cache.emplace(M, std::move(out)).first->second;
}

PrimeSet ass_ideal_subquotient(const MonomialIdeal& U, const MonomialIdeal& V) {
    if (U.dim() != V.dim()) throw error("ass_ideal_subquotient: dimension mismatch");
    if (!U.contains(V)) throw error("ass_ideal_subquotient requires V <= U");
    if (U == V) throw error("ass_ideal_subquotient: U = V gives the zero module");
    return colon_search(U, V);
}

PrimeSet ass_module_quotient(const MonomialSubmodule& U, const MonomialSubmodule& V) {
    if (U.dim() != V.dim() || U.rank() != V.rank())
        throw error("ass_module_quotient: shape mismatch");
    if (!submodule_leq(V, U)) throw error("ass_module_quotient requires V <= U");
    if (U == V) throw error("ass_module_quotient: U = V gives the zero module");
    PrimeSet out;
    for (int i = 0; i < U.rank(); ++i) {
        const MonomialIdeal& ui = U.coord(i);
        const MonomialIdeal& vi = V.coord(i);
        if (ui == vi) continue;
        PrimeSet part = ui.is_unit() ? ass_cyclic(vi) : ass_ideal_subquotient(ui, vi);
        out.insert(part.begin(), part.end());
    }
    return out;
}

AssSequenceReport ass_rr_sequence(const MonomialIdeal& I, const QuotientPresentation& P,
                                  int n_max, int window, int cap) {
    validate_sequence_inputs(I, P, n_max);
    const MonomialSubmodule full = MonomialSubmodule::full(P.dim(), P.rank());
    AssSequenceReport r;
    r.closure_certified = true;
    for (int n = 1; n <= n_max; ++n) {
        const ClosureResult c = rr_power(I, n, P, window, cap);
        r.closure_certified = r.closure_certified && c.certified;
        if (c.value == full) {
            r.per_n.emplace_back();
            r.degenerate_indices.push_back(n);
        } else {
            r.per_n.push_back(ass_module_quotient(full, c.value));
        }
    }
    finish_report(r, window);
    return r;
}

AssSequenceReport ass_power_sequence(const MonomialIdeal& I, const QuotientPresentation& P,
                                     int n_max) {
    validate_sequence_inputs(I, P, n_max);
    const MonomialSubmodule full = MonomialSubmodule::full(P.dim(), P.rank());
    AssSequenceReport r;
    r.closure_certified = true;  // no closures involved
    for (int n = 1; n <= n_max; ++n) {
        const MonomialSubmodule W = power_scale_preimage(I, n, P);
        if (W == full) {
            r.per_n.emplace_back();
            r.degenerate_indices.push_back(n);
        } else {
            r.per_n.push_back(ass_module_quotient(full, W));
        }
    }
    finish_report(r, kDefaultWindow);
    return r;
}

AssSequenceReport ass_successive_rr(const MonomialIdeal& I, const QuotientPresentation& P,
                                    int n_max, int window, int cap) {
    validate_sequence_inputs(I, P, n_max);
    AssSequenceReport r;
    r.closure_certified = true;
    for (int n = 1; n <= n_max; ++n) {
        const ClosureResult upper = rr_power(I, n, P, window, cap);
        const ClosureResult lower = rr_power(I, n + 1, P, window, cap);
        r.closure_certified = r.closure_certified && upper.certified && lower.certified;
        if (!submodule_leq(lower.value, upper.value))
            throw error("internal: closure filtration failed to decrease");
        if (upper.value == lower.value) {
            r.per_n.emplace_back();
            r.degenerate_indices.push_back(n);
        } else {
            r.per_n.push_back(ass_module_quotient(upper.value, lower.value));
        }
    }
    finish_report(r, window);
    return r;
}

StableAssEqualityReport stable_ass_equality_check(const MonomialIdeal& I, int n_max, int window,
                                                  int cap) {
    const QuotientPresentation P = QuotientPresentation::trivial(I.dim());
    StableAssEqualityReport r;
    r.top = ass_rr_sequence(I, P, n_max, window, cap);
    r.successive = ass_successive_rr(I, P, n_max, window, cap);
    for (int n0 = 1; n0 <= n_max; ++n0) {
        bool ok = true;
        for (int n = n0; n <= n_max && ok; ++n) ok = r.top.at(n) == r.successive.at(n);
        if (ok) {
            r.equal_from = n0;
            r.found = true;
            break;
        }
    }
    return r;
}

bool grade_positive(const MonomialIdeal& I, const QuotientPresentation& P) {
    if (!I.is_proper()) throw error("grade_positive: the ideal must be proper");
    if (P.module_is_zero()) throw error("grade_positive: the module is zero");
    if (I.dim() != P.dim()) throw error("grade_positive: dimension mismatch");
    const MonomialSubmodule full = MonomialSubmodule::full(P.dim(), P.rank());
    const PrimeSet ass_E = ass_module_quotient(full, P.relations());
    for (const MonomialPrime& p : ass_E)
        if (p.contains_ideal(I)) return false;
    return true;
}

EventualEqualityReport eventual_equality_check(const MonomialIdeal& I,
                                               const QuotientPresentation& P, int n_max,
                                               int window, int cap) {
    if (!grade_positive(I, P))
        throw error("eventual_equality_check requires grade(I, E) > 0");
    if (n_max < 1) throw error("eventual_equality_check: n_max must be at least 1");
    EventualEqualityReport r;
    r.closure_certified = true;
    for (int n = 1; n <= n_max; ++n) {
        const ClosureResult c = rr_power(I, n, P, window, cap);
        r.closure_certified = r.closure_certified && c.certified;
        r.equal_at.push_back(c.value == power_scale_preimage(I, n, P));
    }
    for (int n0 = n_max; n0 >= 1; --n0) {
        if (!r.equal_at[static_cast<std::size_t>(n0 - 1)]) break;
        r.stable_from = n0;
    }
    r.found = r.stable_from.has_value();
    return r;
}

} // namespace rrtk
