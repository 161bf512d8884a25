#pragma once

#include "rrtk/monomial.hpp"

#include <optional>

namespace rrtk {

/// A monomial ideal of k[x_1..x_d] in canonical form: the unique minimal
/// generating set, sorted lexicographically by exponent vector. The zero
/// ideal has no generators; the unit ideal is generated by the monomial 1.
/// Values are immutable; all operations below are pure functions.
class MonomialIdeal {
public:
    /// Empty placeholder (dim 0); every real value comes from a factory.
    MonomialIdeal() : dim_(0) {}
    /// Minimalize and canonicalize `gens`.
    static MonomialIdeal make(int dim, std::vector<Monomial> gens);
    static MonomialIdeal zero(int dim);
    static MonomialIdeal unit(int dim);
    static MonomialIdeal principal(const Monomial& m);

    int dim() const { return dim_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_proper() const { return !is_unit(); }

    /// Ideal membership: some generator divides m.
    bool contains(const Monomial& m) const;
    /// Ideal containment: every generator of `other` is a member.
    bool contains(const MonomialIdeal& other) const;

    /// Componentwise maximum exponent over the generators (zeros if none).
    std::vector<Exponent> max_exponents() const;
    /// Smallest total degree of a member; nullopt for the zero ideal.
    std::optional<Exponent> min_total_degree() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.dim_ == b.dim_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }
    /// Arbitrary total order for use as map/set keys.
    friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b);

private:
    MonomialIdeal(int dim, std::vector<Monomial> gens);
    int dim_;
    std::vector<Monomial> gens_;
};

/// Canonical minimal generating set of the ideal generated by `gens`.
MonomialIdeal minimalize(int dim, std::vector<Monomial> gens);

bool membership(const Monomial& m, const MonomialIdeal& A);

MonomialIdeal ideal_sum(const MonomialIdeal& A, const MonomialIdeal& B);
MonomialIdeal ideal_product(const MonomialIdeal& A, const MonomialIdeal& B);
/// A^n with A^0 = unit. Results are memoized process-wide; the cache is
/// thread-safe and behaves as transparent memoization.
MonomialIdeal ideal_power(const MonomialIdeal& A, int n);
MonomialIdeal ideal_intersect(const MonomialIdeal& A, const MonomialIdeal& B);
/// (A : B). Undefined (throws) for zero B.
MonomialIdeal ideal_colon(const MonomialIdeal& A, const MonomialIdeal& B);
/// (A : B^k) computed as k successive single colons; equals
/// ideal_colon(A, ideal_power(B, k)) but avoids expanding B^k.
MonomialIdeal ideal_colon_power(const MonomialIdeal& A, const MonomialIdeal& B, int k);

/// Monomial prime: the ideal generated by the variables in `vars`
/// (sorted, 0-based). An empty `vars` is the zero prime of the domain.
struct MonomialPrime {
    int dim = 0;
    std::vector<int> vars;

    MonomialIdeal to_ideal() const;
    /// supp(m) meets vars, i.e. m lies in the prime.
    bool contains_monomial(const Monomial& m) const;
    /// Ideal containment A <= this prime: every generator lies in it.
    bool contains_ideal(const MonomialIdeal& A) const;

    friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
        return a.dim == b.dim && a.vars == b.vars;
    }
    friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vars < b.vars;
    }
};

std::string to_string(const MonomialPrime& p, const std::vector<std::string>& var_names);

struct PrimeData {
    MonomialIdeal radical;
    bool is_prime = false;
    std::optional<MonomialPrime> prime;
};

/// Radical and primality data for a proper ideal. The zero ideal is the
/// zero prime (the ambient ring is a domain).
PrimeData prime_data(const MonomialIdeal& A);

/// Irredundant decomposition into irreducible monomial ideals (each
/// generated by pure variable powers), computed by recursively splitting a
/// mixed generator g = u*v with coprime u, v into (A+(u)) cap (A+(v)) and
/// pruning redundant components. Input must be proper and nonzero.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& A);

/// Image of A under x_j -> 1 for every variable outside `keep`; models
/// localization at the monomial prime generated by `keep`.
MonomialIdeal localize_ideal(const MonomialIdeal& A, const std::vector<int>& keep);

} // namespace rrtk
