#pragma once

#include "rrtk/associated_primes.hpp"

#include <cstdint>
#include <string>

namespace rrtk {

/// Verdict of the reduction test N1 -> N2 w.r.t. I. A positive verdict
/// carries a witness index k with I^k N2 <= I^{k+1} N1 + N, re-verified by
/// direct containment. A negative verdict is certified only when a degree
/// obstruction rules out every exponent, not just those up to the cap;
/// otherwise it means "false up to the cap".
struct ReductionVerdict {
    bool holds = false;
    std::optional<int> witness_index;
    std::optional<ModuleElement> counterexample;
    bool certified = false;
};

/// Is N1 a Ratliff-Rush reduction of N2 w.r.t. I inside E = F/N, i.e. does
/// every x in N2 satisfy I^k x <= I^{k+1} N1 + N for some k? Implemented
/// exactly as that elementwise condition (note it is not reflexive on
/// positive-degree data over E = R). Requires N1 <= N2.
ReductionVerdict is_rr_reduction(const MonomialSubmodule& N1, const MonomialSubmodule& N2,
                                 const MonomialIdeal& I, const QuotientPresentation& P,
                                 int window = kDefaultWindow, int cap = kDefaultCap);

/// Least s <= cap with I^s N2 <= I^{s+1} N1 + N (a single exponent working
/// for all of N2 at once). Throws when the reduction does not hold.
std::optional<int> uniform_reduction_index(const MonomialSubmodule& N1,
                                           const MonomialSubmodule& N2, const MonomialIdeal& I,
                                           const QuotientPresentation& P, int cap = kDefaultCap);

struct ReductionSuiteConfig {
    int samples_per_item = 100;
    std::uint64_t seed = 1;
    int d_max = 3;
    int r_max = 2;
    int max_gens = 3;
    Exponent max_exp = 3;
    int window = kDefaultWindow;
    int cap = kDefaultCap;
    int max_attempts_factor = 200;  // sampling budget per accepted instance
};

struct ReductionSuiteItem {
    std::string name;
    int sampled = 0;
    bool pass = false;
    std::string detail;                       // human-readable summary
    std::optional<std::string> counterexample; // instance text when failing
};

struct ReductionSuiteReport {
    std::vector<ReductionSuiteItem> items;
    bool all_pass = false;
};

/// Randomized checks of the structural laws of Ratliff-Rush reductions:
/// transitivity, closure monotonicity, ideal scaling, middle modules, sums,
/// cancellation by a regular element, and localization. Each item samples
/// hypothesis-satisfying instances deterministically from the seed and
/// fails with a concrete counterexample instance if a law breaks.
ReductionSuiteReport reduction_property_suite(const ReductionSuiteConfig& config);

} // namespace rrtk
