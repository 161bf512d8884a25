#pragma once

// Shared helpers for the unit suites: terse constructors and a
// deterministic generator for property-style loops.

#include "rrtk/module.hpp"

#include <random>

namespace rrtest {

using rrtk::Exponent;
using rrtk::Monomial;
using rrtk::MonomialIdeal;
using rrtk::MonomialSubmodule;

inline Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

inline MonomialIdeal ideal(int dim, std::vector<std::vector<Exponent>> gens) {
    std::vector<Monomial> ms;
    for (auto& e : gens) ms.emplace_back(std::move(e));
    return MonomialIdeal::make(dim, std::move(ms));
}

inline MonomialSubmodule submodule(int dim, std::vector<MonomialIdeal> coords) {
    return MonomialSubmodule::make(dim, std::move(coords));
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t operator()(std::uint64_t n) { return engine() % n; }

    Monomial monomial(int d, Exponent max_exp, bool allow_one = false) {
        while (true) {
            std::vector<Exponent> e(static_cast<std::size_t>(d), 0);
            for (int j = 0; j < d; ++j)
                e[static_cast<std::size_t>(j)] =
                    static_cast<Exponent>((*this)(static_cast<std::uint64_t>(max_exp) + 1));
            Monomial m(std::move(e));
            if (allow_one || !m.is_one()) return m;
        }
    }

    MonomialIdeal proper_ideal(int d, int max_gens, Exponent max_exp) {
        const int count = 1 + static_cast<int>((*this)(static_cast<std::uint64_t>(max_gens)));
        std::vector<Monomial> gens;
        for (int i = 0; i < count; ++i) gens.push_back(monomial(d, max_exp));
        return MonomialIdeal::make(d, std::move(gens));
    }
};

/// Exhaustive membership agreement of two ideals on the box
/// [0, bound]^d (the brute-force comparison the derived examples use).
inline bool box_agree(const MonomialIdeal& a, const MonomialIdeal& b, Exponent bound) {
    const int d = a.dim();
    std::vector<Exponent> e(static_cast<std::size_t>(d), 0);
    while (true) {
        const Monomial m(e);
        if (a.contains(m) != b.contains(m)) return false;
        int j = d - 1;
        for (; j >= 0; --j) {
            if (e[static_cast<std::size_t>(j)] < bound) {
                ++e[static_cast<std::size_t>(j)];
                std::fill(e.begin() + j + 1, e.end(), 0);
                break;
            }
        }
        if (j < 0) return true;
    }
}

} // namespace rrtest
