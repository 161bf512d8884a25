#include "rrtk/instance.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace rrtk {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        ++number;
        out.push_back({number, std::string(text.substr(pos, end - pos))});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
}

std::string strip_comment(const std::string& s) {
    const std::size_t hash = s.find('#');
    return hash == std::string::npos ? s : s.substr(0, hash);
}

struct Cursor {
    const Line* line = nullptr;
    std::size_t pos = 0;

    int col() const { return static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(line->number, col(), msg);
    }
    void skip_ws() {
        while (pos < line->text.size() &&
               std::isspace(static_cast<unsigned char>(line->text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= line->text.size();
    }
    char peek() const { return line->text[pos]; }
};

std::string read_word(Cursor& c) {
    c.skip_ws();
    const std::size_t start = c.pos;
    while (c.pos < c.line->text.size()) {
        const char ch = c.line->text[c.pos];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ':') break;
        ++c.pos;
    }
    return c.line->text.substr(start, c.pos - start);
}

bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
    return std::all_of(s.begin(), s.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
}

bool coordinate_marker(const std::string& s) {
    if (s.size() < 2 || s.front() != 'e') return false;
    return std::all_of(s.begin() + 1, s.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

struct MonomialParser {
    const std::vector<std::string>* vars;

    int var_index(const std::string& name) const {
        auto it = std::find(vars->begin(), vars->end(), name);
        return it == vars->end() ? -1 : static_cast<int>(it - vars->begin());
    }

    // One *-separated factor list; `allow_coord` admits a leading e<k>.
    // Returns the coordinate (0-based, -1 if none) and the monomial.
    std::pair<int, Monomial> parse_element(Cursor& c, bool allow_coord) const {
        const int d = static_cast<int>(vars->size());
        std::vector<Exponent> exps(static_cast<std::size_t>(d), 0);
        int coord = -1;
        bool first = true;
        while (true) {
            c.skip_ws();
            const int col = c.col();
            std::string word;
            {
                const std::size_t start = c.pos;
                while (c.pos < c.line->text.size()) {
                    const char ch = c.line->text[c.pos];
                    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '*')
                        break;
                    ++c.pos;
                }
                word = c.line->text.substr(start, c.pos - start);
            }
            if (word.empty()) c.fail("expected a monomial factor");
            if (first && allow_coord && coordinate_marker(word)) {
                coord = std::stoi(word.substr(1)) - 1;
                if (coord < 0) c.fail("coordinate index must be at least 1");
            } else if (word == "1") {
                // identity factor
            } else {
                std::string name = word;
                Exponent exp = 1;
                const std::size_t caret = word.find('^');
                if (caret != std::string::npos) {
                    name = word.substr(0, caret);
                    const std::string expstr = word.substr(caret + 1);
                    if (expstr.empty())
                        throw parse_error(c.line->number, col, "missing exponent after '^'");
                    if (expstr.front() == '-')
                        throw parse_error(c.line->number, col,
                                          "negative exponent in '" + word + "'");
                    try {
                        exp = std::stoll(expstr);
                    } catch (const std::exception&) {
                        throw parse_error(c.line->number, col,
                                          "malformed exponent in '" + word + "'");
                    }
                }
                const int j = var_index(name);
                if (j < 0)
                    throw parse_error(c.line->number, col, "undeclared variable '" + name + "'");
                exps[static_cast<std::size_t>(j)] += exp;
            }
            first = false;
            c.skip_ws();
            if (c.pos < c.line->text.size() && c.peek() == '*') {
                ++c.pos;
                continue;
            }
            break;
        }
        return {coord, Monomial(std::move(exps))};
    }
};

std::vector<Monomial> parse_ideal_gens(Cursor& c, const MonomialParser& mp) {
    std::vector<Monomial> gens;
    if (c.done()) return gens;
    while (true) {
        auto [coord, mono] = mp.parse_element(c, /*allow_coord=*/false);
        (void)coord;
        gens.push_back(std::move(mono));
        if (c.done()) break;
        if (c.peek() != ',') c.fail("expected ',' between generators");
        ++c.pos;
        if (c.done()) c.fail("trailing comma");
    }
    return gens;
}

std::vector<std::vector<Monomial>> parse_submodule_gens(Cursor& c, const MonomialParser& mp,
                                                        int rank) {
    std::vector<std::vector<Monomial>> coords(static_cast<std::size_t>(rank));
    if (c.done()) return coords;
    while (true) {
        const int col = c.col();
        auto [coord, mono] = mp.parse_element(c, /*allow_coord=*/true);
        if (coord < 0) {
            if (rank != 1)
                throw parse_error(c.line->number, col,
                                  "submodule entries need an e<k> coordinate at rank > 1");
            coord = 0;
        }
        if (coord >= rank)
            throw parse_error(c.line->number, col,
                              "coordinate e" + std::to_string(coord + 1) + " exceeds rank " +
                                  std::to_string(rank));
        coords[static_cast<std::size_t>(coord)].push_back(std::move(mono));
        if (c.done()) break;
        if (c.peek() != ',') c.fail("expected ',' between generators");
        ++c.pos;
        if (c.done()) c.fail("trailing comma");
    }
    return coords;
}

MonomialSubmodule build_submodule(int d, int rank, std::vector<std::vector<Monomial>> coords) {
    std::vector<MonomialIdeal> ideals;
    ideals.reserve(static_cast<std::size_t>(rank));
    for (auto& gens : coords) ideals.push_back(MonomialIdeal::make(d, std::move(gens)));
    return MonomialSubmodule::make(d, std::move(ideals));
}

} // namespace

Instance parse_instance(std::string_view text) {
    const std::vector<Line> lines = split_lines(text);
    std::vector<std::string> vars;
    std::optional<std::vector<Monomial>> gens_I, gens_J;
    std::optional<int> rank;
    std::optional<std::vector<std::vector<Monomial>>> gens_N, gens_N1, gens_N2;
    MonomialParser mp{&vars};

    for (const Line& line : lines) {
        // Parse the comment-stripped text; columns stay faithful because
        // the prefix is unchanged.
        const Line working{line.number, strip_comment(line.text)};
        if (is_blank(working.text)) continue;
        Cursor c{&working, 0};

        std::string key = read_word(c);
        if (key == "vars") {
            if (!vars.empty()) c.fail("duplicate 'vars' line");
            while (!c.done()) {
                const int col = c.col();
                std::string name = read_word(c);
                if (!valid_name(name))
                    throw parse_error(line.number, col, "invalid variable name '" + name + "'");
                if (coordinate_marker(name))
                    throw parse_error(line.number, col,
                                      "variable name '" + name +
                                          "' collides with coordinate markers e<k>");
                if (std::find(vars.begin(), vars.end(), name) != vars.end())
                    throw parse_error(line.number, col, "duplicate variable '" + name + "'");
                vars.push_back(std::move(name));
            }
            if (vars.empty()) c.fail("'vars' line declares no variables");
            continue;
        }
        if (vars.empty()) c.fail("the first content line must declare 'vars'");
        if (key == "ideal") {
            std::string which = read_word(c);
            c.skip_ws();
            if (c.done() || c.peek() != ':') c.fail("expected ':' after ideal name");
            ++c.pos;
            std::vector<Monomial> gens = parse_ideal_gens(c, mp);
            if (which == "I") {
                if (gens_I) c.fail("duplicate 'ideal I'");
                gens_I = std::move(gens);
            } else if (which == "J") {
                if (gens_J) c.fail("duplicate 'ideal J'");
                gens_J = std::move(gens);
            } else {
                c.fail("unknown ideal '" + which + "' (expected I or J)");
            }
            continue;
        }
        if (key == "module") {
            std::string word = read_word(c);
            if (word != "rank") c.fail("expected 'module rank <r>'");
            const int col = c.col();
            std::string num = read_word(c);
            int r = 0;
            try {
                r = std::stoi(num);
            } catch (const std::exception&) {
                throw parse_error(line.number, col, "malformed rank '" + num + "'");
            }
            if (r < 1) throw parse_error(line.number, col, "rank must be at least 1");
            if (rank) c.fail("duplicate 'module rank' line");
            rank = r;
            if (!c.done()) c.fail("trailing text after rank");
            continue;
        }
        if (key == "submodule") {
            std::string which = read_word(c);
            c.skip_ws();
            if (c.done() || c.peek() != ':') c.fail("expected ':' after submodule name");
            ++c.pos;
            if (which != "N" && which != "N1" && which != "N2")
                c.fail("unknown submodule '" + which + "' (expected N, N1 or N2)");
            if (!rank) c.fail("'module rank' must precede submodule lines");
            auto coords = parse_submodule_gens(c, mp, *rank);
            if (which == "N") {
                if (gens_N) c.fail("duplicate 'submodule N'");
                gens_N = std::move(coords);
            } else if (which == "N1") {
                if (gens_N1) c.fail("duplicate 'submodule N1'");
                gens_N1 = std::move(coords);
            } else {
                if (gens_N2) c.fail("duplicate 'submodule N2'");
                gens_N2 = std::move(coords);
            }
            continue;
        }
        c.fail("unknown key '" + key + "'");
    }

    if (vars.empty()) throw parse_error(1, 1, "missing 'vars' line");
    if (!gens_I) throw parse_error(1, 1, "missing 'ideal I' line");
    if (!rank) throw parse_error(1, 1, "missing 'module rank' line");
    if (!gens_N) throw parse_error(1, 1, "missing 'submodule N' line");

    Instance inst;
    inst.vars = vars;
    const int d = static_cast<int>(vars.size());
    inst.ideal_I = MonomialIdeal::make(d, std::move(*gens_I));
    if (gens_J) inst.ideal_J = MonomialIdeal::make(d, std::move(*gens_J));
    inst.rank = *rank;
    inst.relations = build_submodule(d, *rank, std::move(*gens_N));
    if (gens_N1) inst.submodule_N1 = build_submodule(d, *rank, std::move(*gens_N1));
    if (gens_N2) inst.submodule_N2 = build_submodule(d, *rank, std::move(*gens_N2));
    return inst;
}

namespace {

std::string format_gens(const MonomialIdeal& A, const std::vector<std::string>& vars) {
    std::string out;
    bool first = true;
    for (const Monomial& g : A.gens()) {
        if (!first) out += ", ";
        out += to_string(g, vars);
        first = false;
    }
    return out;
}

std::string format_submodule(const MonomialSubmodule& W, const std::vector<std::string>& vars) {
    std::string out;
    bool first = true;
    for (int i = 0; i < W.rank(); ++i) {
        for (const Monomial& g : W.coord(i).gens()) {
            if (!first) out += ", ";
            out += "e" + std::to_string(i + 1);
            if (!g.is_one()) out += "*" + to_string(g, vars);
            first = false;
        }
    }
    return out;
}

} // namespace

std::string print_instance(const Instance& instance) {
    std::string out = "vars";
    for (const std::string& v : instance.vars) out += " " + v;
    out += "\n";
    out += "ideal I:";
    if (!instance.ideal_I.is_zero()) out += " " + format_gens(instance.ideal_I, instance.vars);
    out += "\n";
    if (instance.ideal_J) {
        out += "ideal J:";
        if (!instance.ideal_J->is_zero())
            out += " " + format_gens(*instance.ideal_J, instance.vars);
        out += "\n";
    }
    out += "module rank " + std::to_string(instance.rank) + "\n";
    auto emit = [&](const char* name, const MonomialSubmodule& W) {
        out += std::string("submodule ") + name + ":";
        const std::string body = format_submodule(W, instance.vars);
        if (!body.empty()) out += " " + body;
        out += "\n";
    };
    emit("N", instance.relations);
    if (instance.submodule_N1) emit("N1", *instance.submodule_N1);
    if (instance.submodule_N2) emit("N2", *instance.submodule_N2);
    return out;
}

namespace {

std::uint64_t rng_range(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Monomial random_monomial(std::mt19937_64& rng, int d, Exponent max_exp) {
    while (true) {
        std::vector<Exponent> e(static_cast<std::size_t>(d), 0);
        for (int j = 0; j < d; ++j)
            e[static_cast<std::size_t>(j)] =
                static_cast<Exponent>(rng_range(rng, static_cast<std::uint64_t>(max_exp) + 1));
        Monomial m(std::move(e));
        if (!m.is_one()) return m;
    }
}

MonomialIdeal random_proper_ideal(std::mt19937_64& rng, int d, int max_gens, Exponent max_exp) {
    const int count = 1 + static_cast<int>(rng_range(rng, static_cast<std::uint64_t>(max_gens)));
    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) gens.push_back(random_monomial(rng, d, max_exp));
    return MonomialIdeal::make(d, std::move(gens));
}

} // namespace

Instance gen_random(std::uint64_t seed, const GenParams& params) {
    if (params.d_max < 1 || params.d_max > 4 || params.r_max < 1 || params.r_max > 4 ||
        params.max_gens < 1 || params.max_exp < 1)
        throw error("gen_random: bounds out of range (d,r <= 4; positive gens/exponent)");
    std::mt19937_64 rng(seed);
    // Skew toward the larger dimensions; d = 1 stays represented.
    int d = 1 + static_cast<int>(rng_range(rng, static_cast<std::uint64_t>(params.d_max)));
    if (d == 1 && params.d_max > 1 && rng_range(rng, 4) != 0)
        d = 1 + static_cast<int>(rng_range(rng, static_cast<std::uint64_t>(params.d_max)));
    const int r = 1 + static_cast<int>(rng_range(rng, static_cast<std::uint64_t>(params.r_max)));

    static const char* kNames[4] = {"x", "y", "z", "w"};
    Instance inst;
    for (int j = 0; j < d; ++j) inst.vars.emplace_back(kNames[j]);
    inst.rank = r;
    inst.ideal_I = random_proper_ideal(rng, d, params.max_gens, params.max_exp);
    if (params.with_ideal_J)
        inst.ideal_J = random_proper_ideal(rng, d, params.max_gens, params.max_exp);

    std::vector<MonomialIdeal> coords;
    for (int i = 0; i < r; ++i) {
        if (rng_range(rng, 5) < 2) {
            coords.push_back(MonomialIdeal::zero(d));
        } else {
            coords.push_back(random_proper_ideal(rng, d, params.max_gens, params.max_exp));
        }
    }
    inst.relations = MonomialSubmodule::make(d, std::move(coords));

    if (params.with_reduction_pair) {
        std::vector<MonomialIdeal> c1, c2;
        for (int i = 0; i < r; ++i) {
            MonomialIdeal extra1 = rng_range(rng, 2) == 0
                                       ? MonomialIdeal::zero(d)
                                       : random_proper_ideal(rng, d, 2, params.max_exp);
            c1.push_back(ideal_sum(inst.relations.coord(i), extra1));
        }
        MonomialSubmodule n1 = MonomialSubmodule::make(d, std::move(c1));
        for (int i = 0; i < r; ++i) {
            MonomialIdeal extra2 = rng_range(rng, 2) == 0
                                       ? MonomialIdeal::zero(d)
                                       : random_proper_ideal(rng, d, 2, params.max_exp);
            c2.push_back(ideal_sum(n1.coord(i), extra2));
        }
        inst.submodule_N1 = n1;
        inst.submodule_N2 = MonomialSubmodule::make(d, std::move(c2));
    }
    return inst;
}

} // namespace rrtk
