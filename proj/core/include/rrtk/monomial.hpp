#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrtk {

using Exponent = std::int64_t;

/// Error type for every domain violation: dimension mismatches, undefined
/// operations (colon by the zero ideal, decomposing the unit ideal),
/// exponent overflow, parse failures.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Largest exponent any arithmetic result may carry. Exceeding the cap
/// throws rrtk::error. Default is 2^31 - 1.
Exponent exponent_cap();
void set_exponent_cap(Exponent cap);

/// A monomial in d variables, stored as its exponent vector. Immutable.
/// The coefficient field never appears anywhere in this library; every
/// operation reduces to exponent arithmetic.
class Monomial {
public:
    /// Empty placeholder (dim 0); every real value carries dim >= 1.
    Monomial() = default;
    explicit Monomial(std::vector<Exponent> exponents);
    static Monomial one(int dim);
    static Monomial variable(int dim, int var, Exponent exp = 1);

    int dim() const { return static_cast<int>(exps_.size()); }
    Exponent operator[](int var) const { return exps_[static_cast<std::size_t>(var)]; }
    const std::vector<Exponent>& exponents() const { return exps_; }
    Exponent total_degree() const;
    bool is_one() const;
    /// 0-based indices of variables with positive exponent.
    std::vector<int> support() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<Exponent> exps_;
};

/// Lexicographic order on exponent vectors; the canonical generator order.
bool lex_less(const Monomial& a, const Monomial& b);
inline bool operator<(const Monomial& a, const Monomial& b) { return lex_less(a, b); }

/// a | b, i.e. componentwise a_j <= b_j.
bool divides(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): the generator of the colon (a : b).
Monomial colon_quotient(const Monomial& a, const Monomial& b);
/// Exact division; requires b | a.
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& a, Exponent n);
/// Image of the monomial under x_j -> 1 for every variable j outside
/// `keep` (sorted 0-based indices): those exponents are set to zero.
Monomial restrict_to(const Monomial& a, const std::vector<int>& keep);

std::string to_string(const Monomial& m, const std::vector<std::string>& var_names);

} // namespace rrtk
