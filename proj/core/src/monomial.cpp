#include "rrtk/monomial.hpp"

#include <algorithm>
#include <atomic>

namespace rrtk {

namespace {

std::atomic<Exponent> g_exponent_cap{(Exponent{1} << 31) - 1};

void check_same_dim(const Monomial& a, const Monomial& b, const char* op) {
    if (a.dim() != b.dim())
        throw error(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                    " vs " + std::to_string(b.dim()) + ")");
}

} // namespace

Exponent exponent_cap() { return g_exponent_cap.load(std::memory_order_relaxed); }

void set_exponent_cap(Exponent cap) {
    if (cap < 1) throw error("exponent cap must be positive");
    g_exponent_cap.store(cap, std::memory_order_relaxed);
}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw error("monomial needs at least one variable");
    for (Exponent e : exps_)
        if (e < 0) throw error("negative exponent in monomial");
}

Monomial Monomial::one(int dim) {
    if (dim < 1) throw error("ambient dimension must be at least 1");
    return Monomial(std::vector<Exponent>(static_cast<std::size_t>(dim), 0));
}

Monomial Monomial::variable(int dim, int var, Exponent exp) {
    if (var < 0 || var >= dim) throw error("variable index out of range");
    if (exp < 0) throw error("negative exponent in monomial");
    std::vector<Exponent> e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(var)] = exp;
    return Monomial(std::move(e));
}

Exponent Monomial::total_degree() const {
    Exponent d = 0;
    for (Exponent e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int j = 0; j < dim(); ++j)
        if (exps_[static_cast<std::size_t>(j)] > 0) s.push_back(j);
    return s;
}

bool lex_less(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b, "lex_less");
    return a.exponents() < b.exponents();
}

bool divides(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b, "divides");
    for (int j = 0; j < a.dim(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

Monomial mul(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b, "mul");
    const Exponent cap = exponent_cap();
    std::vector<Exponent> e(static_cast<std::size_t>(a.dim()));
    for (int j = 0; j < a.dim(); ++j) {
        e[static_cast<std::size_t>(j)] = a[j] + b[j];
        if (e[static_cast<std::size_t>(j)] > cap)
            throw error("exponent overflow: product exceeds the configured cap");
    }
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b, "gcd");
    std::vector<Exponent> e(static_cast<std::size_t>(a.dim()));
    for (int j = 0; j < a.dim(); ++j) e[static_cast<std::size_t>(j)] = std::min(a[j], b[j]);
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b, "lcm");
    std::vector<Exponent> e(static_cast<std::size_t>(a.dim()));
    for (int j = 0; j < a.dim(); ++j) e[static_cast<std::size_t>(j)] = std::max(a[j], b[j]);
    return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b, "colon_quotient");
    std::vector<Exponent> e(static_cast<std::size_t>(a.dim()));
    for (int j = 0; j < a.dim(); ++j) e[static_cast<std::size_t>(j)] = std::max<Exponent>(a[j] - b[j], 0);
    return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b, "quotient");
    if (!divides(b, a)) throw error("quotient: divisor does not divide");
    std::vector<Exponent> e(static_cast<std::size_t>(a.dim()));
    for (int j = 0; j < a.dim(); ++j) e[static_cast<std::size_t>(j)] = a[j] - b[j];
    return Monomial(std::move(e));
}

Monomial pow(const Monomial& a, Exponent n) {
    if (n < 0) throw error("negative power of monomial");
    const Exponent cap = exponent_cap();
    std::vector<Exponent> e(static_cast<std::size_t>(a.dim()));
    for (int j = 0; j < a.dim(); ++j) {
        if (n > 0 && a[j] > cap / n)
            throw error("exponent overflow: power exceeds the configured cap");
        e[static_cast<std::size_t>(j)] = a[j] * n;
    }
    return Monomial(std::move(e));
}

Monomial restrict_to(const Monomial& a, const std::vector<int>& keep) {
    std::vector<char> mask(static_cast<std::size_t>(a.dim()), 0);
    for (int j : keep) {
        if (j < 0 || j >= a.dim()) throw error("restrict_to: variable index out of range");
        mask[static_cast<std::size_t>(j)] = 1;
    }
    std::vector<Exponent> e(static_cast<std::size_t>(a.dim()), 0);
    for (int j = 0; j < a.dim(); ++j)
        if (mask[static_cast<std::size_t>(j)]) e[static_cast<std::size_t>(j)] = a[j];
    return Monomial(std::move(e));
}

std::string to_string(const Monomial& m, const std::vector<std::string>& var_names) {
    if (static_cast<int>(var_names.size()) != m.dim())
        throw error("to_string: variable name list has wrong length");
    std::string out;
    for (int j = 0; j < m.dim(); ++j) {
        if (m[j] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_names[static_cast<std::size_t>(j)];
        if (m[j] > 1) out += "^" + std::to_string(m[j]);
    }
    return out.empty() ? "1" : out;
}

} // namespace rrtk
