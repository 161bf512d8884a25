#include "rrtk/ideal.hpp"

#include "grid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace rrtk {

namespace {

void check_same_dim(const MonomialIdeal& a, const MonomialIdeal& b, const char* op) {
    if (a.dim() != b.dim())
        throw error(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                    " vs " + std::to_string(b.dim()) + ")");
}

// Flattened canonical form, usable as an ordered map key.
using IdealKey = std::vector<Exponent>;

IdealKey key_of(const MonomialIdeal& A) {
    IdealKey k;
    k.reserve(2 + A.gens().size() * static_cast<std::size_t>(A.dim()));
    k.push_back(A.dim());
    k.push_back(static_cast<Exponent>(A.gens().size()));
    for (const Monomial& m : A.gens())
        k.insert(k.end(), m.exponents().begin(), m.exponents().end());
    return k;
}

constexpr std::size_t kNaivePairLimit = 4096;

std::vector<Exponent> max_bound(const MonomialIdeal& A, const MonomialIdeal& B) {
    std::vector<Exponent> a = A.max_exponents(), b = B.max_exponents();
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = std::max(a[j], b[j]);
    return a;
}

std::mutex g_power_mutex;
std::map<std::pair<IdealKey, int>, MonomialIdeal> g_power_cache;

} // namespace

MonomialIdeal::MonomialIdeal(int dim, std::vector<Monomial> gens)
    : dim_(dim), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::make(int dim, std::vector<Monomial> gens) {
    if (dim < 1) throw error("ambient dimension must be at least 1");
    for (const Monomial& m : gens)
        if (m.dim() != dim) throw error("minimalize: dimension mismatch among generators");
    return MonomialIdeal(dim, detail::minimal_generators(std::move(gens)));
}

MonomialIdeal MonomialIdeal::zero(int dim) { return make(dim, {}); }

MonomialIdeal MonomialIdeal::unit(int dim) { return make(dim, {Monomial::one(dim)}); }

MonomialIdeal MonomialIdeal::principal(const Monomial& m) { return make(m.dim(), {m}); }

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.dim() != dim_) throw error("membership: dimension mismatch");
    for (const Monomial& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    check_same_dim(*this, other, "containment");
    for (const Monomial& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

std::vector<Exponent> MonomialIdeal::max_exponents() const {
    std::vector<Exponent> b(static_cast<std::size_t>(dim_), 0);
    for (const Monomial& g : gens_)
        for (int j = 0; j < dim_; ++j)
            b[static_cast<std::size_t>(j)] = std::max(b[static_cast<std::size_t>(j)], g[j]);
    return b;
}

std::optional<Exponent> MonomialIdeal::min_total_degree() const {
    if (gens_.empty()) return std::nullopt;
    Exponent m = gens_.front().total_degree();
    for (const Monomial& g : gens_) m = std::min(m, g.total_degree());
    return m;
}

bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    return std::lexicographical_compare(
        a.gens_.begin(), a.gens_.end(), b.gens_.begin(), b.gens_.end(),
        [](const Monomial& x, const Monomial& y) { return lex_less(x, y); });
}

MonomialIdeal minimalize(int dim, std::vector<Monomial> gens) {
    return MonomialIdeal::make(dim, std::move(gens));
}

bool membership(const Monomial& m, const MonomialIdeal& A) { return A.contains(m); }

MonomialIdeal ideal_sum(const MonomialIdeal& A, const MonomialIdeal& B) {
    check_same_dim(A, B, "ideal_sum");
    std::vector<Monomial> gens = A.gens();
    gens.insert(gens.end(), B.gens().begin(), B.gens().end());
    return MonomialIdeal::make(A.dim(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& A, const MonomialIdeal& B) {
    check_same_dim(A, B, "ideal_product");
    if (A.is_zero() || B.is_zero()) return MonomialIdeal::zero(A.dim());
    if (A.is_unit()) return B;
    if (B.is_unit()) return A;
    const std::size_t pairs = A.gens().size() * B.gens().size();
    if (pairs > kNaivePairLimit) {
        if (detail::grid_cells(max_bound(A, B), detail::kGridCellLimit))
            return detail::grid_product(A, B);
    }
    return detail::naive_product(A, B);
}

MonomialIdeal ideal_power(const MonomialIdeal& A, int n) {
    if (n < 0) throw error("ideal_power: negative exponent");
    if (n == 0) return MonomialIdeal::unit(A.dim());
    if (n == 1 || A.is_zero() || A.is_unit()) return A;
    const IdealKey key = key_of(A);
    {
        std::lock_guard<std::mutex> lock(g_power_mutex);
        auto it = g_power_cache.find({key, n});
        if (it != g_power_cache.end()) return it->second;
    }
    MonomialIdeal result = ideal_product(ideal_power(A, n - 1), A);
    std::lock_guard<std::mutex> lock(g_power_mutex);
    return g_power_cache.emplace(std::make_pair(key, n), std::move(result)).first->second;
}

MonomialIdeal ideal_intersect(const MonomialIdeal& A, const MonomialIdeal& B) {
    check_same_dim(A, B, "ideal_intersect");
    if (A.is_zero() || B.is_zero()) return MonomialIdeal::zero(A.dim());
    if (A.is_unit()) return B;
    if (B.is_unit()) return A;
    const std::size_t pairs = A.gens().size() * B.gens().size();
    if (pairs > kNaivePairLimit) {
        if (detail::grid_cells(max_bound(A, B), detail::kGridCellLimit))
            return detail::grid_intersect_ideals(A, B);
    }
    return detail::naive_intersect(A, B);
}

MonomialIdeal ideal_colon(const MonomialIdeal& A, const MonomialIdeal& B) {
    check_same_dim(A, B, "ideal_colon");
    if (B.is_zero()) throw error("ideal_colon: colon by the zero ideal is undefined");
    if (B.is_unit() || A.is_zero()) return A;
    if (A.is_unit()) return A;
    if (B.gens().size() == 1) {
        std::vector<Monomial> q;
        q.reserve(A.gens().size());
        for (const Monomial& a : A.gens()) q.push_back(colon_quotient(a, B.gens().front()));
        return MonomialIdeal::make(A.dim(), std::move(q));
    }
    const std::size_t pairs = A.gens().size() * B.gens().size();
    if (pairs > kNaivePairLimit) {
        if (detail::grid_cells(A.max_exponents(), detail::kGridCellLimit))
            return detail::grid_colon_ideals(A, B);
    }
    return detail::naive_colon(A, B);
}

MonomialIdeal ideal_colon_power(const MonomialIdeal& A, const MonomialIdeal& B, int k) {
    check_same_dim(A, B, "ideal_colon_power");
    if (k < 0) throw error("ideal_colon_power: negative exponent");
    if (k == 0) return A;
    if (B.is_zero()) throw error("ideal_colon_power: colon by the zero ideal is undefined");
    if (B.is_unit() || A.is_zero() || A.is_unit()) return A;
    // (A : B^k) = ((A : B) : B^{k-1}); iterate entirely on one grid when it fits.
    if (k > 1) {
        auto cells = detail::grid_cells(A.max_exponents(), detail::kGridCellLimit);
        if (cells && *cells * B.gens().size() > kNaivePairLimit) {
            detail::Grid g = detail::grid_from_ideal(A, A.max_exponents());
            for (int i = 0; i < k; ++i) g = detail::grid_colon(g, B.gens());
            return MonomialIdeal::make(A.dim(), g.extract_min_gens());
        }
    }
    MonomialIdeal r = A;
    for (int i = 0; i < k; ++i) r = ideal_colon(r, B);
    return r;
}

MonomialIdeal MonomialPrime::to_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(vars.size());
    for (int j : vars) gens.push_back(Monomial::variable(dim, j));
    return MonomialIdeal::make(dim, std::move(gens));
}

bool MonomialPrime::contains_monomial(const Monomial& m) const {
    if (m.dim() != dim) throw error("prime membership: dimension mismatch");
    for (int j : vars)
        if (m[j] > 0) return true;
    return false;
}

bool MonomialPrime::contains_ideal(const MonomialIdeal& A) const {
    if (A.dim() != dim) throw error("prime containment: dimension mismatch");
    if (vars.empty()) return A.is_zero();
    for (const Monomial& g : A.gens())
        if (!contains_monomial(g)) return false;
    return true;
}

std::string to_string(const MonomialPrime& p, const std::vector<std::string>& var_names) {
    std::string out = "(";
    bool first = true;
    for (int j : p.vars) {
        if (!first) out += ",";
        out += var_names.at(static_cast<std::size_t>(j));
        first = false;
    }
    out += ")";
    return out;
}

PrimeData prime_data(const MonomialIdeal& A) {
    if (!A.is_proper()) throw error("prime_data: the unit ideal has no radical");
    std::vector<Monomial> rad;
    rad.reserve(A.gens().size());
    for (const Monomial& g : A.gens()) {
        std::vector<Exponent> e(static_cast<std::size_t>(A.dim()));
        for (int j = 0; j < A.dim(); ++j)
            e[static_cast<std::size_t>(j)] = g[j] > 0 ? 1 : 0;
        rad.emplace_back(std::move(e));
    }
    PrimeData out{MonomialIdeal::make(A.dim(), std::move(rad)), true, std::nullopt};
    for (const Monomial& g : A.gens())
        if (g.total_degree() != 1) { out.is_prime = false; break; }
    if (out.is_prime) {
        MonomialPrime p;
        p.dim = A.dim();
        for (const Monomial& g : A.gens()) p.vars.push_back(g.support().front());
        std::sort(p.vars.begin(), p.vars.end());
        out.prime = std::move(p);
    }
    return out;
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& A) {
    if (A.is_zero() || !A.is_proper())
        throw error("irreducible_decomposition requires a proper nonzero ideal");
    const int d = A.dim();
    std::set<IdealKey> seen;
    std::set<IdealKey> emitted;
    std::vector<MonomialIdeal> comps;
    std::vector<MonomialIdeal> stack{A};
    while (!stack.empty()) {
        MonomialIdeal X = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(key_of(X)).second) continue;
        const Monomial* mixed = nullptr;
        for (const Monomial& g : X.gens())
            if (g.support().size() >= 2) { mixed = &g; break; }
        if (!mixed) {
            if (emitted.insert(key_of(X)).second) comps.push_back(std::move(X));
            continue;
        }
        const int j = mixed->support().front();
        const Monomial u = Monomial::variable(d, j, (*mixed)[j]);
        const Monomial v = quotient(*mixed, u);
        std::vector<Monomial> g1 = X.gens();
        g1.push_back(u);
        std::vector<Monomial> g2 = X.gens();
        g2.push_back(v);
        stack.push_back(MonomialIdeal::make(d, std::move(g1)));
        stack.push_back(MonomialIdeal::make(d, std::move(g2)));
    }

    // Prune to the irredundant decomposition. For an irreducible component Q
    // with corner exponents q_j, the largest monomial outside Q has exponent
    // q_j - 1 on vars(Q) and an exponent beyond every component elsewhere;
    // Q is redundant iff that monomial escapes some other component.
    Exponent big = 1;
    for (const MonomialIdeal& c : comps)
        for (const Monomial& g : c.gens())
            for (int j = 0; j < d; ++j) big = std::max(big, g[j] + 1);
    auto corner = [&](const MonomialIdeal& q) {
        std::vector<Exponent> e(static_cast<std::size_t>(d), big);
        for (const Monomial& g : q.gens()) {
            const int j = g.support().front();
            e[static_cast<std::size_t>(j)] = g[j] - 1;
        }
        return Monomial(std::move(e));
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const Monomial m = corner(comps[i]);
            bool redundant = false;
            for (std::size_t j = 0; j < comps.size(); ++j) {
                if (j == i) continue;
                if (!comps[j].contains(m)) { redundant = true; break; }
            }
            if (redundant) {
                comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

MonomialIdeal localize_ideal(const MonomialIdeal& A, const std::vector<int>& keep) {
    std::vector<Monomial> gens;
    gens.reserve(A.gens().size());
    for (const Monomial& g : A.gens()) gens.push_back(restrict_to(g, keep));
    return MonomialIdeal::make(A.dim(), std::move(gens));
}

} // namespace rrtk
