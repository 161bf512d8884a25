#pragma once

// Dense staircase bitmaps for monomial ideals. A Grid records membership of
// every monomial with exponents inside a box [0, bound_0] x ... x [0, bound_{d-1}].
// When bound_j >= max generator exponent in coordinate j, membership of ANY
// monomial m equals the grid value at the componentwise clamp min(m, bound),
// so lookups outside the box stay exact. Used internally to keep colon /
// intersection / product towers from blowing up on generator-list arithmetic.

#include "rrtk/ideal.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace rrtk::detail {

inline constexpr std::size_t kGridCellLimit = std::size_t{1} << 24;

struct Grid {
    int dim = 0;
    std::vector<Exponent> bound;       // inclusive per-axis maxima
    std::vector<std::size_t> stride;   // row-major, last axis contiguous
    std::vector<std::uint8_t> cell;

    std::size_t size() const { return cell.size(); }
    std::size_t index_clamped(const Exponent* e) const;
    bool at_clamped(const Exponent* e) const { return cell[index_clamped(e)] != 0; }
    bool at_clamped(const std::vector<Exponent>& e) const { return at_clamped(e.data()); }

    /// Minimal members (no in-grid predecessor), in lex order.
    std::vector<Monomial> extract_min_gens() const;
};

/// Number of cells of the box, or nullopt if it exceeds `limit`.
std::optional<std::size_t> grid_cells(const std::vector<Exponent>& bound, std::size_t limit);

/// Membership grid of A over the given box; requires bound >= max_exponents(A).
Grid grid_from_ideal(const MonomialIdeal& A, std::vector<Exponent> bound);

/// One colon step: (g : <divisors>) over the same box.
Grid grid_colon(const Grid& g, const std::vector<Monomial>& divisors);

/// Pointwise meet over the componentwise-max box of the two operands.
Grid grid_intersect(const Grid& a, const Grid& b);

// Generator-list fallbacks (always correct, can be quadratic); exposed for
// dual-path tests.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);
MonomialIdeal naive_product(const MonomialIdeal& A, const MonomialIdeal& B);
MonomialIdeal naive_intersect(const MonomialIdeal& A, const MonomialIdeal& B);
MonomialIdeal naive_colon(const MonomialIdeal& A, const MonomialIdeal& B);
MonomialIdeal grid_product(const MonomialIdeal& A, const MonomialIdeal& B);
MonomialIdeal grid_intersect_ideals(const MonomialIdeal& A, const MonomialIdeal& B);
MonomialIdeal grid_colon_ideals(const MonomialIdeal& A, const MonomialIdeal& B);

} // namespace rrtk::detail
