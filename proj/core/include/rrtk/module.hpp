#pragma once

#include "rrtk/ideal.hpp"

namespace rrtk {

/// Element of the free module R^r: a monomial sitting in one coordinate.
/// Monomial elements are all the machinery ever needs: every set produced
/// from monomial data is again a monomial submodule.
struct ModuleElement {
    int coord = 0;  // 0-based
    Monomial mono;

    friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
        return a.coord == b.coord && a.mono == b.mono;
    }
    friend bool operator<(const ModuleElement& a, const ModuleElement& b) {
        if (a.coord != b.coord) return a.coord < b.coord;
        return lex_less(a.mono, b.mono);
    }
};

/// A monomial submodule of F = R^r: a direct sum of monomial ideals, one
/// per coordinate, each in canonical form. Immutable.
class MonomialSubmodule {
public:
    /// Empty placeholder (dim 0, rank 0); every real value comes from a factory.
    MonomialSubmodule() : dim_(0) {}
    static MonomialSubmodule make(int dim, std::vector<MonomialIdeal> coords);
    static MonomialSubmodule zero(int dim, int rank);
    static MonomialSubmodule full(int dim, int rank);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(coords_.size()); }
    const MonomialIdeal& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<MonomialIdeal>& coords() const { return coords_; }

    bool is_zero() const;
    /// All of F: every coordinate is the unit ideal.
    bool is_full() const;
    bool contains(const ModuleElement& e) const;
    /// Generators as module elements, coordinate-major.
    std::vector<ModuleElement> generators() const;

    friend bool operator==(const MonomialSubmodule& a, const MonomialSubmodule& b) {
        return a.dim_ == b.dim_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const MonomialSubmodule& a, const MonomialSubmodule& b) {
        return !(a == b);
    }

private:
    MonomialSubmodule(int dim, std::vector<MonomialIdeal> coords);
    int dim_;
    std::vector<MonomialIdeal> coords_;
};

/// Presentation E = F/N with F = R^r. Every submodule of E handled by this
/// library is represented by its preimage in F, a monomial submodule
/// containing N.
class QuotientPresentation {
public:
    explicit QuotientPresentation(MonomialSubmodule relations);
    /// E = R: rank 1, no relations.
    static QuotientPresentation trivial(int dim);

    int dim() const { return relations_.dim(); }
    int rank() const { return relations_.rank(); }
    const MonomialSubmodule& relations() const { return relations_; }
    /// E = 0 iff every coordinate of N is the unit ideal.
    bool module_is_zero() const { return relations_.is_full(); }

    friend bool operator==(const QuotientPresentation& a, const QuotientPresentation& b) {
        return a.relations_ == b.relations_;
    }

private:
    MonomialSubmodule relations_;
};

/// Coordinatewise I * W.
MonomialSubmodule submodule_scale(const MonomialIdeal& I, const MonomialSubmodule& W);
/// Preimage of I^n E in F: coordinatewise I^n + N_i.
MonomialSubmodule power_scale_preimage(const MonomialIdeal& I, int n, const QuotientPresentation& P);
/// Coordinatewise (W_i : J). Undefined for zero J.
MonomialSubmodule submodule_colon_ideal(const MonomialSubmodule& W, const MonomialIdeal& J);
/// Coordinatewise (W_i : J^k) via iterated single colons.
MonomialSubmodule submodule_colon_ideal_power(const MonomialSubmodule& W, const MonomialIdeal& J, int k);
/// (W :_R e) = (W_{e.coord} : (e.mono)).
MonomialIdeal element_colon(const MonomialSubmodule& W, const ModuleElement& e);
MonomialSubmodule submodule_sum(const MonomialSubmodule& A, const MonomialSubmodule& B);
/// A <= B coordinatewise.
bool submodule_leq(const MonomialSubmodule& A, const MonomialSubmodule& B);
bool submodule_eq(const MonomialSubmodule& A, const MonomialSubmodule& B);
MonomialSubmodule localize_submodule(const MonomialSubmodule& W, const std::vector<int>& keep);

} // namespace rrtk
