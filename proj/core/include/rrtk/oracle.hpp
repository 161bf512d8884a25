#pragma once

#include "rrtk/associated_primes.hpp"
#include "rrtk/instance.hpp"

#include <set>

namespace rrtk {

/// Degree-truncated model of a monomial ideal (rank 1) or submodule:
/// every member of total degree <= degree_bound, listed explicitly.
/// degree_bound is also the soundness range: operations shrink it so that
/// the member list stays exact (complete and correct) up to the bound.
struct TruncatedSet {
    int dim = 0;
    int rank = 1;
    Exponent degree_bound = -1;  // negative: no sound range left
    std::set<ModuleElement> members;

    bool contains(const ModuleElement& e) const { return members.count(e) != 0; }
};

/// All monomials of total degree <= bound, in d variables.
std::vector<Monomial> monomials_up_to(int dim, Exponent bound);

TruncatedSet truncate(const MonomialIdeal& A, Exponent degree_bound);
TruncatedSet truncate(const MonomialSubmodule& W, Exponent degree_bound);

/// Set arithmetic on truncated models, evaluated by definition-level
/// enumeration. Each result carries the degree range on which it is exact.
TruncatedSet oracle_product(const TruncatedSet& ideal, const TruncatedSet& target);
TruncatedSet oracle_power(const TruncatedSet& ideal, int n);
TruncatedSet oracle_intersect(const TruncatedSet& a, const TruncatedSet& b);
TruncatedSet oracle_sum(const TruncatedSet& a, const TruncatedSet& b);
/// { m : m * b in A for every divisor b }; exact up to
/// A.degree_bound - max divisor degree.
TruncatedSet oracle_colon(const TruncatedSet& A, const std::vector<Monomial>& divisors);

/// Chain terms of the closure of I^n E: term k is
/// { e : (I^k truncated) * e inside the truncated I^{n+k} F + N }, exact up
/// to D - k * maxdeg(I).
struct OracleClosure {
    std::vector<TruncatedSet> terms;
    TruncatedSet value;  // union of the terms; bound of the last term
};
OracleClosure oracle_closure_chain(const MonomialIdeal& I, int n, const MonomialSubmodule& N,
                                   Exponent D, int k_max);

/// Associated primes by raw annihilator enumeration: every prime
/// { r : r*m in V } over monomials m in U \ V. Conclusive only when the
/// truncation degree covers all witnesses and annihilator generators;
/// otherwise `required_degree` says what would suffice.
struct OracleAssResult {
    PrimeSet primes;
    bool conclusive = false;
    Exponent required_degree = 0;
};
OracleAssResult oracle_ass_cyclic(const MonomialIdeal& M, Exponent D);
OracleAssResult oracle_ass_subquotient(const MonomialIdeal& U, const MonomialIdeal& V,
                                       Exponent D);

/// One structural-vs-oracle comparison.
struct CrossCheckEntry {
    std::string op;
    bool agree = false;
    bool inconclusive = false;
    Exponent used_degree = 0;
    std::string note;
};

struct CrossCheckReport {
    std::vector<CrossCheckEntry> entries;
    bool all_agree = false;      // no mismatch and no unresolved inconclusive
    std::string reproducer;      // instance text + op for the first failure
};

/// Runs the structural operations of the instance (products, powers,
/// colons, intersections, closure chains, associated primes) against the
/// truncated oracle on their sound degree ranges. Associated-prime
/// comparisons raise the truncation degree on their own when D is too
/// small; an entry stays inconclusive only if even the raised degree is
/// out of budget, and that counts as failure.
CrossCheckReport cross_check(const Instance& instance, Exponent D = 12, int k_max = 6,
                             int window = kDefaultWindow, int cap = kDefaultCap);

} // namespace rrtk
