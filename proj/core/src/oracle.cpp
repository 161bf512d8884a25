#include "rrtk/oracle.hpp"

#include <algorithm>

namespace rrtk {

namespace {

void enumerate(int dim, Exponent bound, std::vector<Exponent>& e, int j,
               std::vector<Monomial>& out) {
    if (j == dim - 1) {
        e[static_cast<std::size_t>(j)] = 0;
        for (Exponent v = 0; v <= bound; ++v) {
            e[static_cast<std::size_t>(j)] = v;
            out.emplace_back(e);
        }
        e[static_cast<std::size_t>(j)] = 0;
        return;
    }
    for (Exponent v = 0; v <= bound; ++v) {
        e[static_cast<std::size_t>(j)] = v;
        enumerate(dim, bound - v, e, j + 1, out);
    }
    e[static_cast<std::size_t>(j)] = 0;
}

Exponent max_gen_degree(const MonomialIdeal& A) {
    Exponent m = 0;
    for (const Monomial& g : A.gens()) m = std::max(m, g.total_degree());
    return m;
}

void check_compatible(const TruncatedSet& a, const TruncatedSet& b, const char* op) {
    if (a.dim != b.dim || a.rank != b.rank)
        throw error(std::string(op) + ": truncated sets have mismatched shape");
}

} // namespace

std::vector<Monomial> monomials_up_to(int dim, Exponent bound) {
    if (dim < 1) throw error("monomials_up_to: dimension must be at least 1");
    std::vector<Monomial> out;
    if (bound < 0) return out;
    std::vector<Exponent> e(static_cast<std::size_t>(dim), 0);
    enumerate(dim, bound, e, 0, out);
    return out;
}

TruncatedSet truncate(const MonomialIdeal& A, Exponent degree_bound) {
    TruncatedSet t;
    t.dim = A.dim();
    t.rank = 1;
    t.degree_bound = degree_bound;
    for (const Monomial& m : monomials_up_to(A.dim(), degree_bound))
        if (A.contains(m)) t.members.insert({0, m});
    return t;
}

TruncatedSet truncate(const MonomialSubmodule& W, Exponent degree_bound) {
    TruncatedSet t;
    t.dim = W.dim();
    t.rank = W.rank();
    t.degree_bound = degree_bound;
    const std::vector<Monomial> all = monomials_up_to(W.dim(), degree_bound);
    for (int i = 0; i < W.rank(); ++i)
        for (const Monomial& m : all)
            if (W.coord(i).contains(m)) t.members.insert({i, m});
    return t;
}

TruncatedSet oracle_product(const TruncatedSet& ideal, const TruncatedSet& target) {
    if (ideal.rank != 1) throw error("oracle_product: the first factor must be an ideal model");
    if (ideal.dim != target.dim) throw error("oracle_product: dimension mismatch");
    TruncatedSet out;
    out.dim = target.dim;
    out.rank = target.rank;
    out.degree_bound = std::min(ideal.degree_bound, target.degree_bound);
    for (const ModuleElement& a : ideal.members) {
        const Exponent da = a.mono.total_degree();
        for (const ModuleElement& b : target.members) {
            if (da + b.mono.total_degree() > out.degree_bound) continue;
            out.members.insert({b.coord, mul(a.mono, b.mono)});
        }
    }
    return out;
}

TruncatedSet oracle_power(const TruncatedSet& ideal, int n) {
    if (ideal.rank != 1) throw error("oracle_power: needs an ideal model");
    if (n < 0) throw error("oracle_power: negative exponent");
    TruncatedSet acc;
    acc.dim = ideal.dim;
    acc.rank = 1;
    acc.degree_bound = ideal.degree_bound;
    for (const Monomial& m : monomials_up_to(ideal.dim, ideal.degree_bound))
        acc.members.insert({0, m});
    for (int i = 0; i < n; ++i) acc = oracle_product(ideal, acc);
    return acc;
}

TruncatedSet oracle_intersect(const TruncatedSet& a, const TruncatedSet& b) {
    check_compatible(a, b, "oracle_intersect");
    TruncatedSet out;
    out.dim = a.dim;
    out.rank = a.rank;
    out.degree_bound = std::min(a.degree_bound, b.degree_bound);
    for (const ModuleElement& e : a.members)
        if (e.mono.total_degree() <= out.degree_bound && b.contains(e)) out.members.insert(e);
    return out;
}

TruncatedSet oracle_sum(const TruncatedSet& a, const TruncatedSet& b) {
    check_compatible(a, b, "oracle_sum");
    TruncatedSet out;
    out.dim = a.dim;
    out.rank = a.rank;
    out.degree_bound = std::min(a.degree_bound, b.degree_bound);
    auto add = [&](const ModuleElement& e) {
        if (e.mono.total_degree() <= out.degree_bound) out.members.insert(e);
    };
    for (const ModuleElement& e : a.members) add(e);
    for (const ModuleElement& e : b.members) add(e);
    return out;
}

TruncatedSet oracle_colon(const TruncatedSet& A, const std::vector<Monomial>& divisors) {
    if (divisors.empty()) throw error("oracle_colon: colon by the zero ideal is undefined");
    Exponent max_div = 0;
    for (const Monomial& b : divisors) max_div = std::max(max_div, b.total_degree());
    TruncatedSet out;
    out.dim = A.dim;
    out.rank = A.rank;
    out.degree_bound = A.degree_bound - max_div;
    if (out.degree_bound < 0) return out;
    const std::vector<Monomial> all = monomials_up_to(A.dim, out.degree_bound);
    for (int i = 0; i < A.rank; ++i) {
        for (const Monomial& m : all) {
            bool ok = true;
            for (const Monomial& b : divisors)
                if (!A.contains({i, mul(m, b)})) { ok = false; break; }
            if (ok) out.members.insert({i, m});
        }
    }
    return out;
}

OracleClosure oracle_closure_chain(const MonomialIdeal& I, int n, const MonomialSubmodule& N,
                                   Exponent D, int k_max) {
    if (I.is_zero() || I.is_unit())
        throw error("oracle_closure_chain: scaling ideal must be nonzero and proper");
    if (n < 1 || k_max < 1) throw error("oracle_closure_chain: n and k_max must be positive");
    const Exponent dI = max_gen_degree(I);
    const TruncatedSet tI = truncate(I, D);
    const TruncatedSet tN = truncate(N, D);

    OracleClosure out;
    TruncatedSet ik = oracle_power(tI, 0);  // all monomials, degree <= D
    TruncatedSet power = oracle_power(tI, n);
    for (int k = 1; k <= k_max; ++k) {
        ik = oracle_product(tI, ik);        // I^k model
        power = oracle_product(tI, power);  // I^{n+k} model
        TruncatedSet target = oracle_sum([&] {
            // I^{n+k} in every coordinate of F
            TruncatedSet t;
            t.dim = N.dim();
            t.rank = N.rank();
            t.degree_bound = power.degree_bound;
            for (int i = 0; i < N.rank(); ++i)
                for (const ModuleElement& e : power.members) t.members.insert({i, e.mono});
            return t;
        }(), tN);

        TruncatedSet term;
        term.dim = N.dim();
        term.rank = N.rank();
        term.degree_bound = D - static_cast<Exponent>(k) * dI;
        if (term.degree_bound >= 0) {
            const std::vector<Monomial> all = monomials_up_to(N.dim(), term.degree_bound);
            for (int i = 0; i < N.rank(); ++i) {
                for (const Monomial& e : all) {
                    const Exponent de = e.total_degree();
                    bool inside = true;
                    for (const ModuleElement& g : ik.members) {
                        if (g.mono.total_degree() + de > D) continue;
                        if (!target.contains({i, mul(g.mono, e)})) { inside = false; break; }
                    }
                    if (inside) term.members.insert({i, e});
                }
            }
        }
        out.terms.push_back(std::move(term));
    }
    // The union holds every element certified by some sound term; it is
    // complete (no missing members) only up to the last term's bound.
    out.value.dim = N.dim();
    out.value.rank = N.rank();
    out.value.degree_bound = out.terms.back().degree_bound;
    for (const TruncatedSet& t : out.terms)
        out.value.members.insert(t.members.begin(), t.members.end());
    return out;
}

namespace {

// Enumerate a coordinate box [0, cap_0] x ... x [0, cap_{d-1}].
std::vector<Monomial> box_monomials(const std::vector<Exponent>& cap) {
    std::vector<Monomial> out;
    std::vector<Exponent> e(cap.size(), 0);
    while (true) {
        out.emplace_back(e);
        int j = static_cast<int>(cap.size()) - 1;
        for (; j >= 0; --j) {
            if (e[static_cast<std::size_t>(j)] < cap[static_cast<std::size_t>(j)]) {
                ++e[static_cast<std::size_t>(j)];
                std::fill(e.begin() + j + 1, e.end(), 0);
                break;
            }
        }
        if (j < 0) break;
    }
    return out;
}

OracleAssResult oracle_ass(const MonomialIdeal& U, const MonomialIdeal& V, Exponent D) {
    const int d = V.dim();
    OracleAssResult out;
    // Both (V : m) and membership of m in U depend only on the clamp of m
    // at max(b_j, u_j) per coordinate, so witnesses are enumerated over
    // that box; a refuting annihilator, being a quotient of a generator of
    // V, lives in the V box with degree at most the largest generator
    // degree. All membership goes through the truncated model, which needs
    // D to cover the box corner plus one annihilator.
    const std::vector<Exponent> bV = V.max_exponents();
    const std::vector<Exponent> bU = U.max_exponents();
    std::vector<Exponent> cap(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        cap[static_cast<std::size_t>(j)] =
            std::max(bV[static_cast<std::size_t>(j)], bU[static_cast<std::size_t>(j)]);
    const Exponent ann_bound = max_gen_degree(V);

    // Plan the enumeration before touching the truncated model: witnesses
    // are the box monomials in U but outside V, and a refutation scan on a
    // witness m needs degree deg(m) + ann_bound.
    std::vector<Monomial> witnesses;
    Exponent witness_deg = 0;
    for (const Monomial& m : box_monomials(cap)) {
        if (!U.contains(m) || V.contains(m)) continue;
        witness_deg = std::max(witness_deg, m.total_degree());
        witnesses.push_back(m);
    }
    out.required_degree = witness_deg + ann_bound;
    if (D < out.required_degree) {
        out.conclusive = false;
        return out;
    }
    out.conclusive = true;

    const TruncatedSet tV = truncate(V, D);
    std::vector<Monomial> annihilator_cands;
    for (const Monomial& r : box_monomials(bV))
        if (!r.is_one() && r.total_degree() <= ann_bound) annihilator_cands.push_back(r);

    for (const Monomial& m : witnesses) {
        // S = variables that multiply m into V; the only possible prime.
        std::vector<int> s_vars;
        for (int j = 0; j < d; ++j)
            if (tV.contains({0, mul(m, Monomial::variable(d, j))})) s_vars.push_back(j);
        MonomialPrime p{d, s_vars};
        bool is_ann = true;
        for (const Monomial& r : annihilator_cands) {
            if (p.contains_monomial(r)) continue;
            if (tV.contains({0, mul(r, m)})) { is_ann = false; break; }
        }
        if (is_ann) out.primes.insert(std::move(p));
    }
    return out;
}

} // namespace

OracleAssResult oracle_ass_cyclic(const MonomialIdeal& M, Exponent D) {
    if (M.is_unit()) throw error("oracle_ass_cyclic: unit ideal gives the zero module");
    if (M.is_zero()) {
        OracleAssResult out;
        out.conclusive = true;
        out.primes.insert(MonomialPrime{M.dim(), {}});
        return out;
    }
    return oracle_ass(MonomialIdeal::unit(M.dim()), M, D);
}

OracleAssResult oracle_ass_subquotient(const MonomialIdeal& U, const MonomialIdeal& V,
                                       Exponent D) {
    if (!U.contains(V)) throw error("oracle_ass_subquotient requires V <= U");
    if (U == V) throw error("oracle_ass_subquotient: zero module");
    if (V.is_zero()) {
        OracleAssResult out;
        out.conclusive = true;
        out.primes.insert(MonomialPrime{V.dim(), {}});
        return out;
    }
    return oracle_ass(U, V, D);
}

namespace {

bool truncations_agree(const TruncatedSet& oracle_side, const MonomialIdeal& structural,
                       Exponent bound) {
    const TruncatedSet s = truncate(structural, bound);
    for (const ModuleElement& e : s.members)
        if (e.mono.total_degree() <= bound && !oracle_side.contains(e)) return false;
    for (const ModuleElement& e : oracle_side.members) {
        if (e.mono.total_degree() > bound) continue;
        if (!s.contains(e)) return false;
    }
    return true;
}

bool truncations_agree(const TruncatedSet& oracle_side, const MonomialSubmodule& structural,
                       Exponent bound) {
    const TruncatedSet s = truncate(structural, bound);
    for (const ModuleElement& e : s.members)
        if (!oracle_side.contains(e)) return false;
    for (const ModuleElement& e : oracle_side.members) {
        if (e.mono.total_degree() > bound) continue;
        if (!s.contains(e)) return false;
    }
    return true;
}

} // namespace

CrossCheckReport cross_check(const Instance& instance, Exponent D, int k_max, int window,
                             int cap) {
    CrossCheckReport report;
    const MonomialIdeal& I = instance.ideal_I;
    if (I.is_zero() || I.is_unit())
        throw error("cross_check requires a nonzero proper ideal I");
    if (instance.presentation().module_is_zero())
        throw error("cross_check requires a nonzero module");
    const MonomialIdeal J = instance.ideal_J.value_or(I);
    const QuotientPresentation P = instance.presentation();
    const int d = instance.dim();

    auto record = [&](CrossCheckEntry entry, const std::string& repro_tag) {
        if ((!entry.agree || entry.inconclusive) && report.reproducer.empty())
            report.reproducer = "# " + entry.op + ": " + repro_tag + "\n" +
                                print_instance(instance);
        report.entries.push_back(std::move(entry));
    };

    const TruncatedSet tI = truncate(I, D);
    const TruncatedSet tJ = truncate(J, D);

    {
        CrossCheckEntry e{"product I*J", false, false, D, ""};
        const TruncatedSet o = oracle_product(tI, tJ);
        e.agree = truncations_agree(o, ideal_product(I, J), o.degree_bound);
        record(std::move(e), "product mismatch");
    }
    for (int n = 2; n <= 4; ++n) {
        CrossCheckEntry e{"power I^" + std::to_string(n), false, false, D, ""};
        const TruncatedSet o = oracle_power(tI, n);
        e.agree = truncations_agree(o, ideal_power(I, n), o.degree_bound);
        record(std::move(e), "power mismatch");
    }
    if (!J.is_zero()) {
        CrossCheckEntry e{"colon I:J", false, false, D, ""};
        const TruncatedSet o = oracle_colon(tI, J.gens());
        e.inconclusive = o.degree_bound < 0;
        e.agree = !e.inconclusive && truncations_agree(o, ideal_colon(I, J), o.degree_bound);
        record(std::move(e), "colon mismatch");
    }
    {
        CrossCheckEntry e{"colon I^2:I", false, false, D, ""};
        const TruncatedSet o = oracle_colon(oracle_power(tI, 2), I.gens());
        e.inconclusive = o.degree_bound < 0;
        e.agree = !e.inconclusive &&
                  truncations_agree(o, ideal_colon(ideal_power(I, 2), I), o.degree_bound);
        record(std::move(e), "colon mismatch");
    }
    {
        CrossCheckEntry e{"intersect I,J", false, false, D, ""};
        const TruncatedSet o = oracle_intersect(tI, tJ);
        e.agree = truncations_agree(o, ideal_intersect(I, J), o.degree_bound);
        record(std::move(e), "intersection mismatch");
    }

    // Closure chains, term by term on each term's own sound range, plus the
    // stabilized value when certification kicked in early enough. A chain
    // term at level k costs k * maxdeg(I) degrees of truncation, so the
    // degree is raised (within an enumeration budget) until every computed
    // term keeps a usable range.
    const Exponent dI = [&] {
        Exponent m = 0;
        for (const Monomial& g : I.gens()) m = std::max(m, g.total_degree());
        return m;
    }();
    auto ball_size = [&](Exponent degree) {
        double size = 1.0;
        for (int j = 1; j <= d; ++j)
            size *= static_cast<double>(degree + j) / static_cast<double>(j);
        return size;
    };
    for (int n = 1; n <= 2; ++n) {
        const ClosureResult structural = rr_power(I, n, P, window, cap);
        const int terms = std::min(static_cast<int>(structural.chain.size()), k_max);
        Exponent needed = D;
        for (int k = 1; k <= terms; ++k) {
            Exponent slack = 0;
            for (const MonomialIdeal& c :
                 structural.chain[static_cast<std::size_t>(k - 1)].coords())
                for (const Monomial& g : c.gens())
                    slack = std::max(slack, g.total_degree());
            needed = std::max(needed,
                              static_cast<Exponent>(k) * dI + std::min<Exponent>(slack, 12));
        }
        while (needed > D && ball_size(needed) > 30000.0) --needed;
        const OracleClosure oracle = oracle_closure_chain(I, n, P.relations(), needed, terms);
        const std::string raised =
            needed > D ? "degree raised to " + std::to_string(needed) : "";
        for (int k = 1; k <= terms; ++k) {
            const TruncatedSet& term = oracle.terms[static_cast<std::size_t>(k - 1)];
            CrossCheckEntry e{"closure chain n=" + std::to_string(n) + " k=" + std::to_string(k),
                              false, false, needed, raised};
            if (term.degree_bound < 0) {
                e.inconclusive = true;
                e.note = "truncation too small for this chain term";
            } else {
                e.agree = truncations_agree(
                    term, structural.chain[static_cast<std::size_t>(k - 1)], term.degree_bound);
            }
            record(std::move(e), "closure chain mismatch");
        }
        if (structural.certified && structural.stabilized_at && *structural.stabilized_at <= terms) {
            const TruncatedSet& term =
                oracle.terms[static_cast<std::size_t>(*structural.stabilized_at - 1)];
            CrossCheckEntry e{"closure value n=" + std::to_string(n), false, false, needed,
                              raised};
            if (term.degree_bound < 0) {
                e.inconclusive = true;
                e.note = "truncation too small for the stabilized term";
            } else {
                e.agree = truncations_agree(term, structural.value, term.degree_bound);
            }
            record(std::move(e), "closure value mismatch");
        }
    }

    // Associated primes; the oracle raises the degree itself when needed.
    constexpr Exponent kDegreeBudget = 96;
    auto ass_entry = [&](const std::string& op, const PrimeSet& structural,
                         const MonomialIdeal& top, const MonomialIdeal& bottom) {
        CrossCheckEntry e{op, false, false, D, ""};
        OracleAssResult o = top.is_unit() ? oracle_ass_cyclic(bottom, D)
                                          : oracle_ass_subquotient(top, bottom, D);
        if (!o.conclusive && o.required_degree <= kDegreeBudget) {
            e.used_degree = o.required_degree;
            o = top.is_unit() ? oracle_ass_cyclic(bottom, o.required_degree)
                              : oracle_ass_subquotient(top, bottom, o.required_degree);
            e.note = "degree raised to " + std::to_string(e.used_degree);
        }
        if (!o.conclusive) {
            e.inconclusive = true;
            e.note = "required degree " + std::to_string(o.required_degree) +
                     " exceeds the budget";
        } else {
            e.agree = o.primes == structural;
        }
        record(std::move(e), "associated primes mismatch");
    };

    if (I.is_proper()) ass_entry("ass R/I", ass_cyclic(I), MonomialIdeal::unit(d), I);
    ass_entry("ass R/I^2", ass_cyclic(ideal_power(I, 2)), MonomialIdeal::unit(d),
              ideal_power(I, 2));
    for (int i = 0; i < P.rank(); ++i) {
        const MonomialIdeal& Ni = P.relations().coord(i);
        if (Ni.is_unit()) continue;
        ass_entry("ass E coordinate " + std::to_string(i + 1), ass_cyclic(Ni),
                  MonomialIdeal::unit(d), Ni);
    }

    report.all_agree = std::all_of(report.entries.begin(), report.entries.end(),
                                   [](const CrossCheckEntry& e) {
                                       return e.agree && !e.inconclusive;
                                   });
    return report;
}

} // namespace rrtk
