#include "rrtk/module.hpp"

#include <algorithm>

namespace rrtk {

namespace {

void check_compatible(const MonomialSubmodule& a, const MonomialSubmodule& b, const char* op) {
    if (a.dim() != b.dim())
        throw error(std::string(op) + ": dimension mismatch");
    if (a.rank() != b.rank())
        throw error(std::string(op) + ": rank mismatch");
}

} // namespace

MonomialSubmodule::MonomialSubmodule(int dim, std::vector<MonomialIdeal> coords)
    : dim_(dim), coords_(std::move(coords)) {}

MonomialSubmodule MonomialSubmodule::make(int dim, std::vector<MonomialIdeal> coords) {
    if (coords.empty()) throw error("submodule needs rank at least 1");
    for (const MonomialIdeal& c : coords)
        if (c.dim() != dim) throw error("submodule: coordinate ideal dimension mismatch");
    return MonomialSubmodule(dim, std::move(coords));
}

MonomialSubmodule MonomialSubmodule::zero(int dim, int rank) {
    if (rank < 1) throw error("submodule needs rank at least 1");
    return make(dim, std::vector<MonomialIdeal>(static_cast<std::size_t>(rank),
                                                MonomialIdeal::zero(dim)));
}

MonomialSubmodule MonomialSubmodule::full(int dim, int rank) {
    if (rank < 1) throw error("submodule needs rank at least 1");
    return make(dim, std::vector<MonomialIdeal>(static_cast<std::size_t>(rank),
                                                MonomialIdeal::unit(dim)));
}

bool MonomialSubmodule::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const MonomialIdeal& c) { return c.is_zero(); });
}

bool MonomialSubmodule::is_full() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const MonomialIdeal& c) { return c.is_unit(); });
}

bool MonomialSubmodule::contains(const ModuleElement& e) const {
    if (e.coord < 0 || e.coord >= rank()) throw error("module element coordinate out of range");
    return coord(e.coord).contains(e.mono);
}

std::vector<ModuleElement> MonomialSubmodule::generators() const {
    std::vector<ModuleElement> out;
    for (int i = 0; i < rank(); ++i)
        for (const Monomial& g : coord(i).gens()) out.push_back({i, g});
    return out;
}

QuotientPresentation::QuotientPresentation(MonomialSubmodule relations)
    : relations_(std::move(relations)) {}

QuotientPresentation QuotientPresentation::trivial(int dim) {
    return QuotientPresentation(MonomialSubmodule::zero(dim, 1));
}

MonomialSubmodule submodule_scale(const MonomialIdeal& I, const MonomialSubmodule& W) {
    if (I.dim() != W.dim()) throw error("submodule_scale: dimension mismatch");
    std::vector<MonomialIdeal> coords;
    coords.reserve(static_cast<std::size_t>(W.rank()));
    for (const MonomialIdeal& c : W.coords()) coords.push_back(ideal_product(I, c));
    return MonomialSubmodule::make(W.dim(), std::move(coords));
}

MonomialSubmodule power_scale_preimage(const MonomialIdeal& I, int n,
                                       const QuotientPresentation& P) {
    if (n < 0) throw error("power_scale_preimage: negative power");
    if (I.dim() != P.dim()) throw error("power_scale_preimage: dimension mismatch");
    const MonomialIdeal In = ideal_power(I, n);
    std::vector<MonomialIdeal> coords;
    coords.reserve(static_cast<std::size_t>(P.rank()));
    for (const MonomialIdeal& c : P.relations().coords()) coords.push_back(ideal_sum(In, c));
    return MonomialSubmodule::make(P.dim(), std::move(coords));
}

MonomialSubmodule submodule_colon_ideal(const MonomialSubmodule& W, const MonomialIdeal& J) {
    if (J.dim() != W.dim()) throw error("submodule_colon_ideal: dimension mismatch");
    if (J.is_zero()) throw error("submodule_colon_ideal: colon by the zero ideal is undefined");
    std::vector<MonomialIdeal> coords;
    coords.reserve(static_cast<std::size_t>(W.rank()));
    for (const MonomialIdeal& c : W.coords()) coords.push_back(ideal_colon(c, J));
    return MonomialSubmodule::make(W.dim(), std::move(coords));
}

MonomialSubmodule submodule_colon_ideal_power(const MonomialSubmodule& W, const MonomialIdeal& J,
                                              int k) {
    if (J.dim() != W.dim()) throw error("submodule_colon_ideal_power: dimension mismatch");
    if (k < 0) throw error("submodule_colon_ideal_power: negative exponent");
    if (k > 0 && J.is_zero())
        throw error("submodule_colon_ideal_power: colon by the zero ideal is undefined");
    std::vector<MonomialIdeal> coords;
    coords.reserve(static_cast<std::size_t>(W.rank()));
    for (const MonomialIdeal& c : W.coords()) coords.push_back(ideal_colon_power(c, J, k));
    return MonomialSubmodule::make(W.dim(), std::move(coords));
}

MonomialIdeal element_colon(const MonomialSubmodule& W, const ModuleElement& e) {
    if (e.coord < 0 || e.coord >= W.rank()) throw error("element_colon: coordinate out of range");
    return ideal_colon(W.coord(e.coord), MonomialIdeal::principal(e.mono));
}

MonomialSubmodule submodule_sum(const MonomialSubmodule& A, const MonomialSubmodule& B) {
    check_compatible(A, B, "submodule_sum");
    std::vector<MonomialIdeal> coords;
    coords.reserve(static_cast<std::size_t>(A.rank()));
    for (int i = 0; i < A.rank(); ++i) coords.push_back(ideal_sum(A.coord(i), B.coord(i)));
    return MonomialSubmodule::make(A.dim(), std::move(coords));
}

bool submodule_leq(const MonomialSubmodule& A, const MonomialSubmodule& B) {
    check_compatible(A, B, "submodule_leq");
    for (int i = 0; i < A.rank(); ++i)
        if (!B.coord(i).contains(A.coord(i))) return false;
    return true;
}

bool submodule_eq(const MonomialSubmodule& A, const MonomialSubmodule& B) {
    check_compatible(A, B, "submodule_eq");
    return A == B;
}

MonomialSubmodule localize_submodule(const MonomialSubmodule& W, const std::vector<int>& keep) {
    std::vector<MonomialIdeal> coords;
    coords.reserve(static_cast<std::size_t>(W.rank()));
    for (const MonomialIdeal& c : W.coords()) coords.push_back(localize_ideal(c, keep));
    return MonomialSubmodule::make(W.dim(), std::move(coords));
}

} // namespace rrtk
