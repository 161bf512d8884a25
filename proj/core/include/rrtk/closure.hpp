#pragma once

#include "rrtk/module.hpp"

#include <optional>

namespace rrtk {

/// Result of a Ratliff-Rush closure computation. `chain` holds the computed
/// colon-chain terms T_1, T_2, ... (each a preimage in F); the chain is
/// non-decreasing, `value` is its last term. `certified` is true only when
/// `window_used` consecutive terms were equal before `cap_used` was reached;
/// otherwise `value` is the union up to the cap and may under-approximate
/// the true closure.
struct ClosureResult {
    MonomialSubmodule value;
    std::vector<MonomialSubmodule> chain;
    std::optional<int> stabilized_at;
    bool certified = false;
    int window_used = 0;
    int cap_used = 0;
};

inline constexpr int kDefaultWindow = 3;
inline constexpr int kDefaultCap = 20;

/// Generalized closure of W inside E = F/N with respect to I: the set of
/// e in F with I^k e <= I^{k+1} W + N for some k, computed as the union of
/// the increasing chain T_k = ((I^{k+1} W + N) : I^k). W need not contain N.
/// I must be nonzero and proper.
ClosureResult rr_closure_general(const MonomialIdeal& I, const MonomialSubmodule& W,
                                 const QuotientPresentation& P, int window = kDefaultWindow,
                                 int cap = kDefaultCap);

/// Preimage of the closure of I^n E inside E: the union of the chain
/// T_k = ((I^{n+k} F + N) : I^k). For n = 0 this is all of F by convention.
ClosureResult rr_power(const MonomialIdeal& I, int n, const QuotientPresentation& P,
                       int window = kDefaultWindow, int cap = kDefaultCap);

/// Closure of the ideal I itself (E = R, n = 1).
ClosureResult rr_ideal(const MonomialIdeal& I, int window = kDefaultWindow,
                       int cap = kDefaultCap);

/// Three-way colon identity: for n >= m >= 1 the closure of I^n E coloned
/// by the closure of I^m, coloned by I^m itself, and the closure of
/// I^{n-m} E must coincide. Computes all three sides independently.
struct ColonIdentityReport {
    int n = 0, m = 0;
    MonomialSubmodule colon_by_closure;  // (closure of I^n E) : closure of I^m
    MonomialSubmodule colon_by_power;    // (closure of I^n E) : I^m
    MonomialSubmodule shifted_closure;   // closure of I^{n-m} E
    bool all_equal = false;
    bool closures_certified = false;
};

ColonIdentityReport colon_identity_check(const MonomialIdeal& I, const QuotientPresentation& P,
                                         int n, int m, int window = kDefaultWindow,
                                         int cap = kDefaultCap);

} // namespace rrtk
