#pragma once

#include "rrtk/module.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rrtk {

/// A parsed problem instance: the ambient ring, the ideal(s), and the
/// module data. Submodules are preimages in F = R^r. Canonical instances
/// round-trip byte-identically through parse/print.
struct Instance {
    std::vector<std::string> vars;
    MonomialIdeal ideal_I;
    std::optional<MonomialIdeal> ideal_J;
    int rank = 1;
    MonomialSubmodule relations;  // N
    std::optional<MonomialSubmodule> submodule_N1;
    std::optional<MonomialSubmodule> submodule_N2;

    int dim() const { return static_cast<int>(vars.size()); }
    QuotientPresentation presentation() const { return QuotientPresentation(relations); }
};

/// Parse error with 1-based source position.
class parse_error : public error {
public:
    parse_error(int line, int column, const std::string& message)
        : error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Parse the text instance format:
///
///   vars x y
///   ideal I: x^4, x^3*y, x*y^3, y^4
///   module rank 1
///   submodule N:
///
/// Optional sections: `ideal J:`, `submodule N1:`, `submodule N2:`.
/// Submodule entries are `e<k>*monomial` (bare monomials allowed at rank 1,
/// bare `e<k>` for the coordinate generator). Blank lines and `#` comments
/// are ignored. Unknown keys are rejected.
Instance parse_instance(std::string_view text);

/// Canonical text form; parse(print(x)) == print(x) byte-identically.
std::string print_instance(const Instance& instance);

struct GenParams {
    int d_max = 3;
    int r_max = 2;
    int max_gens = 4;
    Exponent max_exp = 4;
    bool with_ideal_J = false;
    bool with_reduction_pair = false;
};

/// Deterministic random instance: the ideal is never zero or the unit
/// ideal, and the presented module is nonzero. Identical seeds produce
/// byte-identical instances.
Instance gen_random(std::uint64_t seed, const GenParams& params = {});

} // namespace rrtk
