#include "rrtk/reduction.hpp"

#include "rrtk/instance.hpp"

#include <algorithm>
#include <random>

namespace rrtk {

namespace {

// Containment I^k N2 <= I^{k+1} N1 + N, the uniform reduction statement.
bool uniform_containment(const MonomialIdeal& I, int k, const MonomialSubmodule& N1,
                         const MonomialSubmodule& N2, const MonomialSubmodule& N) {
    const MonomialSubmodule lhs = submodule_scale(ideal_power(I, k), N2);
    const MonomialSubmodule rhs = submodule_sum(submodule_scale(ideal_power(I, k + 1), N1), N);
    return submodule_leq(lhs, rhs);
}

// Degree obstruction: deg(x) below mindeg(I) + mindeg(N1_i) kills the
// scaled-target side for every exponent, and escaping the saturation of
// N_i by a minimal-degree generator of I kills the relations side.
bool degree_obstruction(const ModuleElement& x, const MonomialIdeal& I,
                        const MonomialSubmodule& N1, const MonomialSubmodule& N) {
    const auto d_target = N1.coord(x.coord).min_total_degree();
    if (d_target &&
        x.mono.total_degree() >= *I.min_total_degree() + *d_target)
        return false;
    const Monomial* g_min = &I.gens().front();
    for (const Monomial& g : I.gens())
        if (g.total_degree() < g_min->total_degree()) g_min = &g;
    const MonomialIdeal saturation =
        localize_ideal(N.coord(x.coord), [&] {
            std::vector<int> keep;
            const std::vector<int> supp = g_min->support();
            for (int j = 0; j < I.dim(); ++j)
                if (!std::binary_search(supp.begin(), supp.end(), j)) keep.push_back(j);
            return keep;
        }());
    return !saturation.contains(x.mono);
}

} // namespace

ReductionVerdict is_rr_reduction(const MonomialSubmodule& N1, const MonomialSubmodule& N2,
                                 const MonomialIdeal& I, const QuotientPresentation& P,
                                 int window, int cap) {
    if (!submodule_leq(N1, N2)) throw error("is_rr_reduction requires N1 <= N2");
    const ClosureResult closure = rr_closure_general(I, N1, P, window, cap);
    ReductionVerdict verdict;
    verdict.holds = submodule_leq(N2, closure.value);
    if (verdict.holds) {
        for (int k = 1; k <= cap; ++k) {
            if (uniform_containment(I, k, N1, N2, P.relations())) {
                verdict.witness_index = k;
                break;
            }
        }
        if (!verdict.witness_index)
            throw error("internal: positive reduction verdict without witness index");
        verdict.certified = true;
        return verdict;
    }
    // Prefer a counterexample generator whose exclusion is provable for all
    // exponents, and among those one that lies outside N1 (the informative
    // escapees); otherwise report the first escapee as "false up to cap".
    std::optional<ModuleElement> first_out;
    std::optional<ModuleElement> certified_inside_n1;
    for (const ModuleElement& g : N2.generators()) {
        if (closure.value.contains(g)) continue;
        if (!first_out) first_out = g;
        if (degree_obstruction(g, I, N1, P.relations())) {
            if (!N1.contains(g)) {
                verdict.counterexample = g;
                verdict.certified = true;
                return verdict;
            }
            if (!certified_inside_n1) certified_inside_n1 = g;
        }
    }
    if (certified_inside_n1) {
        verdict.counterexample = certified_inside_n1;
        verdict.certified = true;
        return verdict;
    }
    verdict.counterexample = first_out;
    verdict.certified = false;
    return verdict;
}

std::optional<int> uniform_reduction_index(const MonomialSubmodule& N1,
                                           const MonomialSubmodule& N2, const MonomialIdeal& I,
                                           const QuotientPresentation& P, int cap) {
    const ReductionVerdict verdict = is_rr_reduction(N1, N2, I, P, kDefaultWindow, cap);
    if (!verdict.holds)
        throw error("uniform_reduction_index: the reduction does not hold");
    for (int s = 1; s <= cap; ++s)
        if (uniform_containment(I, s, N1, N2, P.relations())) return s;
    return std::nullopt;
}

namespace {

// Deterministic sampling helpers for the property suite.
struct Sampler {
    std::mt19937_64 rng;
    const ReductionSuiteConfig* cfg;

    std::uint64_t range(std::uint64_t n) { return rng() % n; }

    Monomial monomial(int d, Exponent max_exp, bool allow_one = false) {
        while (true) {
            std::vector<Exponent> e(static_cast<std::size_t>(d), 0);
            for (int j = 0; j < d; ++j)
                e[static_cast<std::size_t>(j)] =
                    static_cast<Exponent>(range(static_cast<std::uint64_t>(max_exp) + 1));
            Monomial m(std::move(e));
            if (allow_one || !m.is_one()) return m;
        }
    }

    MonomialIdeal proper_ideal(int d) {
        const int count = 1 + static_cast<int>(range(static_cast<std::uint64_t>(cfg->max_gens)));
        std::vector<Monomial> gens;
        for (int i = 0; i < count; ++i) gens.push_back(monomial(d, cfg->max_exp));
        return MonomialIdeal::make(d, std::move(gens));
    }

    // Presentation biased toward nilpotent or partially nilpotent action of
    // I, where reduction hypotheses are plentiful.
    QuotientPresentation presentation(int d, int r, const MonomialIdeal& I) {
        std::vector<MonomialIdeal> coords;
        for (int i = 0; i < r; ++i) {
            const std::uint64_t roll = range(10);
            if (roll < 4) {
                coords.push_back(ideal_power(I, 2));
            } else if (roll < 6) {
                coords.push_back(ideal_sum(ideal_power(I, 2), proper_ideal(d)));
            } else if (roll < 8) {
                coords.push_back(proper_ideal(d));
            } else {
                coords.push_back(MonomialIdeal::zero(d));
            }
        }
        return QuotientPresentation(MonomialSubmodule::make(d, std::move(coords)));
    }

    // A random submodule containing `base`.
    MonomialSubmodule over(const MonomialSubmodule& base) {
        std::vector<MonomialIdeal> coords;
        for (int i = 0; i < base.rank(); ++i) {
            MonomialIdeal extra = range(2) == 0 ? MonomialIdeal::zero(base.dim())
                                                : MonomialIdeal::make(base.dim(),
                                                                      {monomial(base.dim(),
                                                                                cfg->max_exp)});
            coords.push_back(ideal_sum(base.coord(i), extra));
        }
        return MonomialSubmodule::make(base.dim(), std::move(coords));
    }
};

struct SampleContext {
    MonomialIdeal I;
    QuotientPresentation P{MonomialSubmodule::zero(1, 1)};
};

SampleContext sample_context(Sampler& s) {
    const int d = 1 + static_cast<int>(s.range(static_cast<std::uint64_t>(s.cfg->d_max)));
    const int r = 1 + static_cast<int>(s.range(static_cast<std::uint64_t>(s.cfg->r_max)));
    SampleContext ctx;
    ctx.I = s.proper_ideal(d);
    ctx.P = s.presentation(d, r, ctx.I);
    return ctx;
}

std::string describe_instance(const SampleContext& ctx, const MonomialSubmodule* n1,
                              const MonomialSubmodule* n2) {
    Instance inst;
    static const char* kNames[4] = {"x", "y", "z", "w"};
    for (int j = 0; j < ctx.I.dim(); ++j) inst.vars.emplace_back(kNames[j]);
    inst.ideal_I = ctx.I;
    inst.rank = ctx.P.rank();
    inst.relations = ctx.P.relations();
    if (n1) inst.submodule_N1 = *n1;
    if (n2) inst.submodule_N2 = *n2;
    return print_instance(inst);
}

ReductionSuiteItem run_item(const char* name, std::uint64_t seed,
                            const ReductionSuiteConfig& cfg,
                            bool (*body)(Sampler&, const ReductionSuiteConfig&, std::string&)) {
    ReductionSuiteItem item;
    item.name = name;
    Sampler sampler{std::mt19937_64(seed), &cfg};
    const long budget =
        static_cast<long>(cfg.samples_per_item) * cfg.max_attempts_factor;
    long attempts = 0;
    std::string counterexample;
    while (item.sampled < cfg.samples_per_item && attempts < budget) {
        ++attempts;
        counterexample.clear();
        if (!body(sampler, cfg, counterexample)) {
            if (!counterexample.empty()) {
                item.pass = false;
                item.counterexample = counterexample;
                item.detail = "law violated after " + std::to_string(item.sampled) +
                              " accepted instances";
                return item;
            }
            continue;  // hypothesis not satisfied; resample
        }
        ++item.sampled;
    }
    if (item.sampled < cfg.samples_per_item) {
        item.pass = false;
        item.detail = "sampler starvation: only " + std::to_string(item.sampled) +
                      " hypothesis-satisfying instances in " + std::to_string(attempts) +
                      " attempts";
        return item;
    }
    item.pass = true;
    item.detail = std::to_string(item.sampled) + " instances";
    return item;
}

bool reduction_holds(const MonomialSubmodule& a, const MonomialSubmodule& b, const SampleContext& ctx,
                     const ReductionSuiteConfig& cfg) {
    return is_rr_reduction(a, b, ctx.I, ctx.P, cfg.window, cfg.cap).holds;
}

// (i) transitivity
bool item_transitivity(Sampler& s, const ReductionSuiteConfig& cfg, std::string& cex) {
    SampleContext ctx = sample_context(s);
    const MonomialSubmodule n = s.over(ctx.P.relations());
    const MonomialSubmodule k = s.over(n);
    const MonomialSubmodule l = s.over(k);
    if (!reduction_holds(n, k, ctx, cfg) || !reduction_holds(k, l, ctx, cfg)) return false;
    if (reduction_holds(n, l, ctx, cfg)) return true;
    cex = "transitivity: N->K and K->L hold but N->L fails\n" + describe_instance(ctx, &n, &l);
    return false;
}

// (ii) closure monotone in the target submodule
bool item_closure_monotone(Sampler& s, const ReductionSuiteConfig& cfg, std::string& cex) {
    SampleContext ctx = sample_context(s);
    const MonomialSubmodule w1 = s.over(MonomialSubmodule::zero(ctx.I.dim(), ctx.P.rank()));
    const MonomialSubmodule w2 = s.over(w1);
    const ClosureResult c1 = rr_closure_general(ctx.I, w1, ctx.P, cfg.window, cfg.cap);
    const ClosureResult c2 = rr_closure_general(ctx.I, w2, ctx.P, cfg.window, cfg.cap);
    if (submodule_leq(c1.value, c2.value)) return true;
    cex = "closure monotonicity: W1 <= W2 but closure(W1) escapes closure(W2)\n" +
          describe_instance(ctx, &w1, &w2);
    return false;
}

// (iii) scaling by an ideal
bool item_scaling(Sampler& s, const ReductionSuiteConfig& cfg, std::string& cex) {
    SampleContext ctx = sample_context(s);
    const MonomialSubmodule n = s.over(ctx.P.relations());
    const MonomialSubmodule k = s.over(n);
    if (!reduction_holds(n, k, ctx, cfg)) return false;
    const MonomialIdeal J = s.proper_ideal(ctx.I.dim());
    const MonomialSubmodule jn =
        submodule_sum(submodule_scale(J, n), ctx.P.relations());
    const MonomialSubmodule jk =
        submodule_sum(submodule_scale(J, k), ctx.P.relations());
    if (reduction_holds(jn, jk, ctx, cfg)) return true;
    cex = "ideal scaling: N->K holds but J*N -> J*K fails\n" + describe_instance(ctx, &jn, &jk);
    return false;
}

// (iv) middle module
bool item_middle(Sampler& s, const ReductionSuiteConfig& cfg, std::string& cex) {
    SampleContext ctx = sample_context(s);
    const MonomialSubmodule n1 = s.over(ctx.P.relations());
    const MonomialSubmodule n2 = s.over(n1);
    const MonomialSubmodule n3 = s.over(n2);
    if (!reduction_holds(n1, n3, ctx, cfg)) return false;
    if (reduction_holds(n2, n3, ctx, cfg)) return true;
    cex = "middle module: N1->N3 holds, N1<=N2<=N3, but N2->N3 fails\n" +
          describe_instance(ctx, &n2, &n3);
    return false;
}

// (v) sums
bool item_sums(Sampler& s, const ReductionSuiteConfig& cfg, std::string& cex) {
    SampleContext ctx = sample_context(s);
    const MonomialSubmodule n1 = s.over(ctx.P.relations());
    const MonomialSubmodule n2 = s.over(n1);
    const MonomialSubmodule m1 = s.over(ctx.P.relations());
    const MonomialSubmodule m2 = s.over(m1);
    if (!reduction_holds(n1, n2, ctx, cfg) || !reduction_holds(m1, m2, ctx, cfg)) return false;
    if (reduction_holds(submodule_sum(n1, m1), submodule_sum(n2, m2), ctx, cfg)) return true;
    cex = "sums: N1->N2 and M1->M2 hold but the sums fail\n" +
          describe_instance(ctx, nullptr, nullptr);
    return false;
}

// (vi) cancellation by a regular element
bool item_cancellation(Sampler& s, const ReductionSuiteConfig& cfg, std::string& cex) {
    SampleContext ctx = sample_context(s);
    const MonomialSubmodule full = MonomialSubmodule::full(ctx.I.dim(), ctx.P.rank());
    if (ctx.P.module_is_zero()) return false;
    const PrimeSet ass = ass_module_quotient(full, ctx.P.relations());
    std::vector<char> blocked(static_cast<std::size_t>(ctx.I.dim()), 0);
    for (const MonomialPrime& p : ass)
        for (int j : p.vars) blocked[static_cast<std::size_t>(j)] = 1;
    std::vector<int> free_vars;
    for (int j = 0; j < ctx.I.dim(); ++j)
        if (!blocked[static_cast<std::size_t>(j)]) free_vars.push_back(j);
    if (free_vars.empty()) return false;
    const int v = free_vars[static_cast<std::size_t>(s.range(free_vars.size()))];
    const Monomial c =
        Monomial::variable(ctx.I.dim(), v, 1 + static_cast<Exponent>(s.range(2)));

    const MonomialSubmodule n1 = s.over(ctx.P.relations());
    const MonomialSubmodule n2 = s.over(n1);
    const MonomialIdeal cI = MonomialIdeal::principal(c);
    const MonomialSubmodule cn1 = submodule_sum(submodule_scale(cI, n1), ctx.P.relations());
    const MonomialSubmodule cn2 = submodule_sum(submodule_scale(cI, n2), ctx.P.relations());
    if (!reduction_holds(cn1, cn2, ctx, cfg)) return false;
    if (reduction_holds(n1, n2, ctx, cfg)) return true;
    cex = "regular cancellation: c*N1 -> c*N2 holds (c regular) but N1 -> N2 fails\n" +
          describe_instance(ctx, &n1, &n2);
    return false;
}

// (vii) localization at every variable subset
bool item_localization(Sampler& s, const ReductionSuiteConfig& cfg, std::string& cex) {
    SampleContext ctx = sample_context(s);
    const MonomialSubmodule n1 = s.over(ctx.P.relations());
    const MonomialSubmodule n2 = s.over(n1);
    if (!reduction_holds(n1, n2, ctx, cfg)) return false;
    const int d = ctx.I.dim();
    bool any_keep = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        std::vector<int> keep;
        for (int j = 0; j < d; ++j)
            if (mask & (std::size_t{1} << j)) keep.push_back(j);
        const MonomialIdeal I_loc = localize_ideal(ctx.I, keep);
        if (I_loc.is_zero() || I_loc.is_unit()) continue;  // degenerate localization
        const MonomialSubmodule N_loc = localize_submodule(ctx.P.relations(), keep);
        if (N_loc.is_full()) continue;  // localized module is zero
        const QuotientPresentation P_loc{N_loc};
        // Localization is monotone, so l1 <= l2 carries over.
        const MonomialSubmodule l1 = submodule_sum(localize_submodule(n1, keep), N_loc);
        const MonomialSubmodule l2 = submodule_sum(localize_submodule(n2, keep), N_loc);
        any_keep = true;
        SampleContext loc_ctx{I_loc, P_loc};
        if (!reduction_holds(l1, l2, loc_ctx, cfg)) {
            cex = "localization: reduction lost after localizing\n" +
                  describe_instance(loc_ctx, &l1, &l2);
            return false;
        }
    }
    return any_keep;
}

} // namespace

ReductionSuiteReport reduction_property_suite(const ReductionSuiteConfig& config) {
    ReductionSuiteReport report;
    const std::uint64_t s0 = config.seed;
    report.items.push_back(run_item("transitivity", s0 + 11, config, item_transitivity));
    report.items.push_back(
        run_item("closure-monotonicity", s0 + 22, config, item_closure_monotone));
    report.items.push_back(run_item("ideal-scaling", s0 + 33, config, item_scaling));
    report.items.push_back(run_item("middle-module", s0 + 44, config, item_middle));
    report.items.push_back(run_item("sums", s0 + 55, config, item_sums));
    report.items.push_back(run_item("regular-cancellation", s0 + 66, config, item_cancellation));
    report.items.push_back(run_item("localization", s0 + 77, config, item_localization));
    report.all_pass = std::all_of(report.items.begin(), report.items.end(),
                                  [](const ReductionSuiteItem& i) { return i.pass; });
    return report;
}

} // namespace rrtk
