#include "grid.hpp"

#include <algorithm>
#include <cstring>

namespace rrtk::detail {

std::optional<std::size_t> grid_cells(const std::vector<Exponent>& bound, std::size_t limit) {
    std::size_t cells = 1;
    for (Exponent b : bound) {
        if (b < 0) return std::nullopt;
        const std::size_t extent = static_cast<std::size_t>(b) + 1;
        if (cells > limit / extent) return std::nullopt;
        cells *= extent;
    }
    return cells;
}

std::size_t Grid::index_clamped(const Exponent* e) const {
    std::size_t idx = 0;
    for (int j = 0; j < dim; ++j) {
        const Exponent c = std::min(e[j], bound[static_cast<std::size_t>(j)]);
        idx += static_cast<std::size_t>(c) * stride[static_cast<std::size_t>(j)];
    }
    return idx;
}

namespace {

Grid make_grid(int dim, std::vector<Exponent> bound) {
    Grid g;
    g.dim = dim;
    g.bound = std::move(bound);
    g.stride.assign(static_cast<std::size_t>(dim), 1);
    std::size_t s = 1;
    for (int j = dim - 1; j >= 0; --j) {
        g.stride[static_cast<std::size_t>(j)] = s;
        s *= static_cast<std::size_t>(g.bound[static_cast<std::size_t>(j)]) + 1;
    }
    g.cell.assign(s, 0);
    return g;
}

// Row-major odometer; returns false once exhausted.
bool advance(std::vector<Exponent>& e, const std::vector<Exponent>& bound) {
    for (int j = static_cast<int>(e.size()) - 1; j >= 0; --j) {
        if (e[static_cast<std::size_t>(j)] < bound[static_cast<std::size_t>(j)]) {
            ++e[static_cast<std::size_t>(j)];
            std::fill(e.begin() + j + 1, e.end(), 0);
            return true;
        }
    }
    return false;
}

} // namespace

Grid grid_from_ideal(const MonomialIdeal& A, std::vector<Exponent> bound) {
    Grid g = make_grid(A.dim(), std::move(bound));
    for (const Monomial& m : A.gens()) {
        std::size_t idx = 0;
        for (int j = 0; j < g.dim; ++j) {
            if (m[j] > g.bound[static_cast<std::size_t>(j)])
                throw error("internal: grid bound below generator exponent");
            idx += static_cast<std::size_t>(m[j]) * g.stride[static_cast<std::size_t>(j)];
        }
        g.cell[idx] = 1;
    }
    // Upward closure: one ascending sweep; predecessors have smaller index.
    std::vector<Exponent> e(static_cast<std::size_t>(g.dim), 0);
    std::size_t idx = 0;
    do {
        if (!g.cell[idx]) {
            for (int j = 0; j < g.dim; ++j) {
                if (e[static_cast<std::size_t>(j)] > 0 &&
                    g.cell[idx - g.stride[static_cast<std::size_t>(j)]]) {
                    g.cell[idx] = 1;
                    break;
                }
            }
        }
        ++idx;
    } while (advance(e, g.bound));
    return g;
}

std::vector<Monomial> Grid::extract_min_gens() const {
    std::vector<Monomial> out;
    std::vector<Exponent> e(static_cast<std::size_t>(dim), 0);
    std::size_t idx = 0;
    do {
        if (cell[idx]) {
            bool minimal = true;
            for (int j = 0; j < dim && minimal; ++j)
                if (e[static_cast<std::size_t>(j)] > 0 &&
                    cell[idx - stride[static_cast<std::size_t>(j)]])
                    minimal = false;
            if (minimal) out.emplace_back(e);
        }
        ++idx;
    } while (advance(e, bound));
    return out;  // already lex-sorted by construction
}

Grid grid_colon(const Grid& g, const std::vector<Monomial>& divisors) {
    Grid out = make_grid(g.dim, g.bound);
    std::fill(out.cell.begin(), out.cell.end(), 1);
    // One shifted AND-sweep per divisor, row by row along the last axis so
    // the clamped source index moves by unit stride until it saturates.
    const int d = g.dim;
    const Exponent last_bound = g.bound[static_cast<std::size_t>(d - 1)];
    const std::size_t row_len = static_cast<std::size_t>(last_bound) + 1;
    std::vector<Exponent> prefix(static_cast<std::size_t>(d > 1 ? d - 1 : 0), 0);
    for (const Monomial& b : divisors) {
        const Exponent b_last = b[d - 1];
        bool more = true;
        std::size_t row_base = 0;
        std::fill(prefix.begin(), prefix.end(), 0);
        while (more) {
            std::size_t src_base = 0;
            for (int j = 0; j + 1 < d; ++j) {
                const Exponent c = std::min(prefix[static_cast<std::size_t>(j)] + b[j],
                                            g.bound[static_cast<std::size_t>(j)]);
                src_base += static_cast<std::size_t>(c) * g.stride[static_cast<std::size_t>(j)];
            }
            // unclamped stretch, then the saturated tail
            const Exponent split = std::max<Exponent>(last_bound - b_last + 1, 0);
            const std::uint8_t* src = g.cell.data() + src_base;
            std::uint8_t* dst = out.cell.data() + row_base;
            for (Exponent c = 0; c < split; ++c) dst[c] &= src[c + b_last];
            const std::uint8_t tail = src[last_bound];
            for (Exponent c = split; c <= last_bound; ++c) dst[c] &= tail;

            more = false;
            for (int j = d - 2; j >= 0; --j) {
                if (prefix[static_cast<std::size_t>(j)] < g.bound[static_cast<std::size_t>(j)]) {
                    ++prefix[static_cast<std::size_t>(j)];
                    std::fill(prefix.begin() + j + 1, prefix.end(), 0);
                    more = true;
                    break;
                }
            }
            row_base += row_len;
        }
    }
    return out;
}

Grid grid_intersect(const Grid& a, const Grid& b) {
    std::vector<Exponent> bound(static_cast<std::size_t>(a.dim));
    for (int j = 0; j < a.dim; ++j)
        bound[static_cast<std::size_t>(j)] =
            std::max(a.bound[static_cast<std::size_t>(j)], b.bound[static_cast<std::size_t>(j)]);
    Grid out = make_grid(a.dim, std::move(bound));
    std::vector<Exponent> e(static_cast<std::size_t>(a.dim), 0);
    std::size_t idx = 0;
    do {
        out.cell[idx] = (a.at_clamped(e) && b.at_clamped(e)) ? 1 : 0;
        ++idx;
    } while (advance(e, out.bound));
    return out;
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
    for (const Monomial& m : gens)
        if (m.is_one()) return {Monomial::one(m.dim())};
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        const Exponent da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return lex_less(a, b);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    out.reserve(gens.size());
    // A proper divisor has strictly smaller degree, so checking accepted
    // generators only is complete.
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& g : out)
            if (divides(g, m)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

MonomialIdeal naive_product(const MonomialIdeal& A, const MonomialIdeal& B) {
    std::vector<Monomial> cand;
    cand.reserve(A.gens().size() * B.gens().size());
    for (const Monomial& a : A.gens())
        for (const Monomial& b : B.gens()) cand.push_back(mul(a, b));
    return MonomialIdeal::make(A.dim(), std::move(cand));
}

MonomialIdeal naive_intersect(const MonomialIdeal& A, const MonomialIdeal& B) {
    std::vector<Monomial> cand;
    cand.reserve(A.gens().size() * B.gens().size());
    for (const Monomial& a : A.gens())
        for (const Monomial& b : B.gens()) cand.push_back(lcm(a, b));
    return MonomialIdeal::make(A.dim(), std::move(cand));
}

MonomialIdeal naive_colon(const MonomialIdeal& A, const MonomialIdeal& B) {
    bool first = true;
    MonomialIdeal acc = MonomialIdeal::unit(A.dim());
    for (const Monomial& b : B.gens()) {
        std::vector<Monomial> q;
        q.reserve(A.gens().size());
        for (const Monomial& a : A.gens()) q.push_back(colon_quotient(a, b));
        MonomialIdeal part = MonomialIdeal::make(A.dim(), std::move(q));
        acc = first ? part : naive_intersect(acc, part);
        first = false;
    }
    return acc;
}

MonomialIdeal grid_product(const MonomialIdeal& A, const MonomialIdeal& B) {
    // Shift the grid of one factor by the generators of the other.
    const MonomialIdeal& base = A.gens().size() >= B.gens().size() ? A : B;
    const MonomialIdeal& shifts = A.gens().size() >= B.gens().size() ? B : A;
    const std::vector<Exponent> mb = base.max_exponents();
    const std::vector<Exponent> ms = shifts.max_exponents();
    std::vector<Exponent> bound(static_cast<std::size_t>(A.dim()));
    for (int j = 0; j < A.dim(); ++j)
        bound[static_cast<std::size_t>(j)] =
            mb[static_cast<std::size_t>(j)] + ms[static_cast<std::size_t>(j)];
    Grid gb = grid_from_ideal(base, mb);
    Grid out = make_grid(A.dim(), bound);
    std::vector<Exponent> e(static_cast<std::size_t>(A.dim()), 0);
    std::vector<Exponent> shifted(static_cast<std::size_t>(A.dim()), 0);
    std::size_t idx = 0;
    do {
        bool member = false;
        for (const Monomial& s : shifts.gens()) {
            bool ok = true;
            for (int j = 0; j < A.dim(); ++j) {
                const Exponent v = e[static_cast<std::size_t>(j)] - s[j];
                if (v < 0) { ok = false; break; }
                shifted[static_cast<std::size_t>(j)] = v;
            }
            if (ok && gb.at_clamped(shifted)) { member = true; break; }
        }
        out.cell[idx] = member ? 1 : 0;
        ++idx;
    } while (advance(e, out.bound));
    return MonomialIdeal::make(A.dim(), out.extract_min_gens());
}

MonomialIdeal grid_intersect_ideals(const MonomialIdeal& A, const MonomialIdeal& B) {
    Grid ga = grid_from_ideal(A, A.max_exponents());
    Grid gb = grid_from_ideal(B, B.max_exponents());
    Grid out = grid_intersect(ga, gb);
    return MonomialIdeal::make(A.dim(), out.extract_min_gens());
}

MonomialIdeal grid_colon_ideals(const MonomialIdeal& A, const MonomialIdeal& B) {
    Grid ga = grid_from_ideal(A, A.max_exponents());
    Grid out = grid_colon(ga, B.gens());
    return MonomialIdeal::make(A.dim(), out.extract_min_gens());
}

} // namespace rrtk::detail
