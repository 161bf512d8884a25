#include "rrtk/closure.hpp"

#include <map>
#include <mutex>

namespace rrtk {

namespace {

void validate_scaling_ideal(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw error("closure: the scaling ideal must be nonzero and proper");
}

void validate_window(int window, int cap) {
    if (window < 1) throw error("closure: window must be at least 1");
    if (cap < window) throw error("closure: cap must be at least the window");
}

using CacheKey = std::vector<Exponent>;

void append_ideal(CacheKey& k, const MonomialIdeal& A) {
    k.push_back(A.dim());
    k.push_back(static_cast<Exponent>(A.gens().size()));
    for (const Monomial& m : A.gens())
        k.insert(k.end(), m.exponents().begin(), m.exponents().end());
}

void append_submodule(CacheKey& k, const MonomialSubmodule& W) {
    k.push_back(W.rank());
    for (const MonomialIdeal& c : W.coords()) append_ideal(k, c);
}

std::mutex g_cache_mutex;
std::map<CacheKey, ClosureResult> g_cache;

std::optional<ClosureResult> cache_find(const CacheKey& k) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(k);
    if (it == g_cache.end()) return std::nullopt;
    return it->second;
}

void cache_store(const CacheKey& k, const ClosureResult& r) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.emplace(k, r);
}

// The relation part of every chain term contains (N : I^k), which grows on
// its own schedule: a window of equal terms observed while that saturation
// is still climbing proves nothing (the relations can absorb a later power
// and enlarge the colon again). The saturation chain, unlike the full one,
// has an exact fixpoint certificate: once (N : I^k) = (N : I^{k+1}) it is
// stable forever. Windows are therefore only counted from that index on.
int saturation_index(const MonomialSubmodule& N, const MonomialIdeal& I, int cap) {
    int worst = 0;
    for (const MonomialIdeal& c : N.coords()) {
        MonomialIdeal cur = c;
        for (int k = 0; k < cap; ++k) {
            MonomialIdeal next = ideal_colon(cur, I);
            if (next == cur) {
                worst = std::max(worst, k);
                break;
            }
            cur = std::move(next);
            if (k + 1 == cap) worst = cap;
        }
    }
    return worst;
}

// Runs the chain T_k = (target(k) : I^k) for k = 1..cap with window-based
// stabilization detection, gated by the relation saturation index.
// target(k) must be monotone enough that the chain ascends; a violation is
// an internal error.
template <typename TargetFn>
ClosureResult run_chain(const MonomialIdeal& I, const MonomialSubmodule& N, TargetFn&& target,
                        int window, int cap) {
    ClosureResult result;
    result.window_used = window;
    result.cap_used = cap;
    const int gate = saturation_index(N, I, cap);
    for (int k = 1; k <= cap; ++k) {
        MonomialSubmodule term = submodule_colon_ideal_power(target(k), I, k);
        if (!result.chain.empty() && !submodule_leq(result.chain.back(), term))
            throw error("internal: closure chain failed to be non-decreasing");
        result.chain.push_back(std::move(term));
        const int window_start = k - window + 1;
        if (window_start >= 1 && window_start >= gate) {
            bool stable = true;
            for (int i = 1; i < window; ++i)
                if (result.chain[result.chain.size() - 1 - static_cast<std::size_t>(i)] !=
                    result.chain.back()) {
                    stable = false;
                    break;
                }
            if (stable) {
                result.certified = true;
                result.stabilized_at = window_start;
                break;
            }
        }
    }
    result.value = result.chain.back();
    return result;
}

} // namespace

ClosureResult rr_closure_general(const MonomialIdeal& I, const MonomialSubmodule& W,
                                 const QuotientPresentation& P, int window, int cap) {
    validate_scaling_ideal(I);
    validate_window(window, cap);
    if (I.dim() != P.dim() || W.dim() != P.dim())
        throw error("rr_closure_general: dimension mismatch");
    if (W.rank() != P.rank()) throw error("rr_closure_general: rank mismatch");

    CacheKey key{0, static_cast<Exponent>(window), static_cast<Exponent>(cap)};
    append_ideal(key, I);
    append_submodule(key, W);
    append_submodule(key, P.relations());
    if (auto hit = cache_find(key)) return *hit;

    const MonomialSubmodule& N = P.relations();
    ClosureResult result = run_chain(
        I, N,
        [&](int k) {
            return submodule_sum(submodule_scale(ideal_power(I, k + 1), W), N);
        },
        window, cap);
    cache_store(key, result);
    return result;
}

ClosureResult rr_power(const MonomialIdeal& I, int n, const QuotientPresentation& P, int window,
                       int cap) {
    validate_scaling_ideal(I);
    validate_window(window, cap);
    if (n < 0) throw error("rr_power: negative power");
    if (I.dim() != P.dim()) throw error("rr_power: dimension mismatch");

    if (n == 0) {
        // Convention: the closure of I^0 E is all of E.
        ClosureResult result;
        result.value = MonomialSubmodule::full(P.dim(), P.rank());
        result.chain = {result.value};
        result.stabilized_at = 1;
        result.certified = true;
        result.window_used = window;
        result.cap_used = cap;
        return result;
    }

    CacheKey key{1, static_cast<Exponent>(window), static_cast<Exponent>(cap),
                 static_cast<Exponent>(n)};
    append_ideal(key, I);
    append_submodule(key, P.relations());
    if (auto hit = cache_find(key)) return *hit;

    const MonomialSubmodule& N = P.relations();
    ClosureResult result = run_chain(
        I, N,
        [&](int k) {
            const MonomialIdeal Ink = ideal_power(I, n + k);
            std::vector<MonomialIdeal> coords;
            coords.reserve(static_cast<std::size_t>(P.rank()));
            for (const MonomialIdeal& c : N.coords()) coords.push_back(ideal_sum(Ink, c));
            return MonomialSubmodule::make(P.dim(), std::move(coords));
        },
        window, cap);
    cache_store(key, result);
    return result;
}

ClosureResult rr_ideal(const MonomialIdeal& I, int window, int cap) {
    return rr_power(I, 1, QuotientPresentation::trivial(I.dim()), window, cap);
}

ColonIdentityReport colon_identity_check(const MonomialIdeal& I, const QuotientPresentation& P,
                                         int n, int m, int window, int cap) {
    if (m < 1 || n < m) throw error("colon_identity_check requires n >= m >= 1");
    ColonIdentityReport report;
    report.n = n;
    report.m = m;

    const ClosureResult closure_n = rr_power(I, n, P, window, cap);
    const ClosureResult closure_ideal_m =
        rr_power(I, m, QuotientPresentation::trivial(I.dim()), window, cap);
    const MonomialIdeal tilde_Im = closure_ideal_m.value.coord(0);
    const ClosureResult shifted = rr_power(I, n - m, P, window, cap);

    report.colon_by_power = submodule_colon_ideal_power(closure_n.value, I, m);

    // tilde(I^m) = I^m plus a usually tiny set of extra generators, so the
    // colon splits into the cheap iterated power colon and a colon by the
    // leftovers.
    const MonomialIdeal Im = ideal_power(I, m);
    std::vector<Monomial> extra;
    for (const Monomial& g : tilde_Im.gens())
        if (!Im.contains(g)) extra.push_back(g);
    if (extra.empty()) {
        report.colon_by_closure = report.colon_by_power;
    } else {
        std::vector<MonomialIdeal> coords;
        const MonomialIdeal extra_ideal = MonomialIdeal::make(I.dim(), std::move(extra));
        for (int i = 0; i < P.rank(); ++i)
            coords.push_back(ideal_intersect(report.colon_by_power.coord(i),
                                             ideal_colon(closure_n.value.coord(i), extra_ideal)));
        report.colon_by_closure = MonomialSubmodule::make(P.dim(), std::move(coords));
    }
    report.shifted_closure = shifted.value;
    report.all_equal = report.colon_by_closure == report.colon_by_power &&
                       report.colon_by_power == report.shifted_closure;
    report.closures_certified =
        closure_n.certified && closure_ideal_m.certified && shifted.certified;
    return report;
}

} // namespace rrtk
