// Acceptance runner: one line per criterion, nonzero exit on any failure.
// Every tolerance here is exact set equality; runtime limits are asserted
// where stated.

#include "rrtk/oracle.hpp"
#include "rrtk/reduction.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace rrtk;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool pass = true;
    std::string note;
    double seconds = 0.0;
};

std::vector<Criterion> g_results;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(Criterion c) {
    std::printf("[%s] criterion %d: %s%s%s (%.1f s)\n", c.pass ? "PASS" : "FAIL", c.id,
                c.label.c_str(), c.note.empty() ? "" : " -- ", c.note.c_str(), c.seconds);
    std::fflush(stdout);
    g_results.push_back(std::move(c));
}

std::vector<Instance> make_corpus(int count, std::uint64_t base_seed, const GenParams& params) {
    std::vector<Instance> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        out.push_back(gen_random(base_seed + static_cast<std::uint64_t>(k), params));
    return out;
}

const GenParams kCorpusParams{/*d_max=*/3, /*r_max=*/2, /*max_gens=*/4, /*max_exp=*/4,
                              /*with_ideal_J=*/true, /*with_reduction_pair=*/false};

// criterion 1: the three-way colon identity over 1 <= m <= n <= 5
void criterion_colon_identity(const std::vector<Instance>& corpus) {
    Timer t;
    Criterion c{1, "three-way colon identity on the corpus, all 1 <= m <= n <= 5"};
    int checks = 0;
    for (const Instance& inst : corpus) {
        const QuotientPresentation p = inst.presentation();
        for (int n = 1; n <= 5 && c.pass; ++n) {
            for (int m = 1; m <= n; ++m) {
                const ColonIdentityReport r = colon_identity_check(inst.ideal_I, p, n, m);
                ++checks;
                if (!r.all_equal) {
                    c.pass = false;
                    c.note = "inequality at n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                             "\n" + print_instance(inst);
                    break;
                }
            }
        }
        if (!c.pass) break;
    }
    c.seconds = t.seconds();
    if (c.pass) c.note = std::to_string(checks) + " identities, exact equality";
    if (c.seconds > 120.0) {
        c.pass = false;
        c.note += " [runtime over the 2 minute budget]";
    }
    report(std::move(c));
}

// criterion 2: Ass(E/closure(I^n E)) increases
std::vector<AssSequenceReport> criterion_increasing_sequence(const std::vector<Instance>& corpus) {
    Timer t;
    Criterion c{2, "Ass(E / closure of I^n E) increasing, n_max = 6"};
    std::vector<AssSequenceReport> reports;
    reports.reserve(corpus.size());
    for (const Instance& inst : corpus) {
        AssSequenceReport r = ass_rr_sequence(inst.ideal_I, inst.presentation(), 6);
        if (!r.increasing && c.pass) {
            c.pass = false;
            c.note = "non-monotone sequence\n" + print_instance(inst);
        }
        reports.push_back(std::move(r));
    }
    c.seconds = t.seconds();
    if (c.pass) c.note = std::to_string(corpus.size()) + " instances, zero exceptions";
    if (c.seconds > 180.0) {
        c.pass = false;
        c.note += " [runtime over the 3 minute budget]";
    }
    report(std::move(c));
    return reports;
}

// criterion 3: successive quotients increase
void criterion_successive(const std::vector<Instance>& corpus) {
    Timer t;
    Criterion c{3, "Ass of successive closure quotients increasing, n_max = 6"};
    int degenerate = 0;
    for (const Instance& inst : corpus) {
        const AssSequenceReport r = ass_successive_rr(inst.ideal_I, inst.presentation(), 6);
        degenerate += static_cast<int>(r.degenerate_indices.size());
        if (!r.increasing) {
            c.pass = false;
            c.note = "non-monotone sequence\n" + print_instance(inst);
            break;
        }
    }
    c.seconds = t.seconds();
    if (c.pass)
        c.note = std::to_string(corpus.size()) + " instances; " + std::to_string(degenerate) +
                 " degenerate indices reported and excluded";
    if (c.seconds > 180.0) {
        c.pass = false;
        c.note += " [runtime over the 3 minute budget]";
    }
    report(std::move(c));
}

// criterion 4: the two stable sequences agree from some n0 <= 6 (E = R)
void criterion_stable_equality(const std::vector<Instance>& rank1) {
    Timer t;
    Criterion c{4, "stable equality of the two Ass sequences over E = R, n0 <= 6"};
    for (const Instance& inst : rank1) {
        const StableAssEqualityReport r = stable_ass_equality_check(inst.ideal_I, 6);
        if (!r.found) {
            c.pass = false;
            c.note = "no equality tail within n_max = 6\n" + print_instance(inst);
            break;
        }
    }
    c.seconds = t.seconds();
    if (c.pass) c.note = std::to_string(rank1.size()) + " rank-1 instances";
    report(std::move(c));
}

// criterion 5: the closure stable set sits inside the power stable set
void criterion_stable_inclusion(const std::vector<Instance>& corpus,
                                const std::vector<AssSequenceReport>& closure_reports) {
    Timer t;
    Criterion c{5, "closure stable set contained in the ordinary-power stable set"};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const AssSequenceReport power =
            ass_power_sequence(corpus[i].ideal_I, corpus[i].presentation(), 6);
        const PrimeSet& tilde = closure_reports[i].stable_set;
        if (!std::includes(power.stable_set.begin(), power.stable_set.end(), tilde.begin(),
                           tilde.end())) {
            c.pass = false;
            c.note = "inclusion fails\n" + print_instance(corpus[i]);
            break;
        }
    }
    c.seconds = t.seconds();
    if (c.pass) c.note = "100% of the corpus";
    report(std::move(c));
}

// criterion 6: the reduction law suite
void criterion_reduction_suite() {
    Timer t;
    Criterion c{6, "reduction laws (transitivity, monotonicity, scaling, middle, sums, "
                   "cancellation, localization) on >= 100 instances each"};
    ReductionSuiteConfig cfg;
    cfg.samples_per_item = 100;
    cfg.seed = 20240;
    const ReductionSuiteReport r = reduction_property_suite(cfg);
    if (!r.all_pass) {
        c.pass = false;
        for (const auto& item : r.items)
            if (!item.pass) {
                c.note = item.name + ": " + item.detail;
                if (item.counterexample) c.note += "\n" + *item.counterexample;
                break;
            }
    }
    c.seconds = t.seconds();
    if (c.pass) c.note = "7 items x 100 instances";
    report(std::move(c));
}

// criterion 7: closure of I^n E equals I^n E from some n0 <= 10 when grade > 0
void criterion_eventual_equality(const std::vector<Instance>& corpus) {
    Timer t;
    Criterion c{7, "closure of I^n E = I^n E for all n in [n0, 10] when grade(I, E) > 0"};
    int applicable = 0;
    for (const Instance& inst : corpus) {
        if (!grade_positive(inst.ideal_I, inst.presentation())) continue;
        ++applicable;
        const EventualEqualityReport r =
            eventual_equality_check(inst.ideal_I, inst.presentation(), 10);
        if (!r.found) {
            c.pass = false;
            c.note = "no equality tail within n_max = 10\n" + print_instance(inst);
            break;
        }
    }
    c.seconds = t.seconds();
    if (c.pass)
        c.note = std::to_string(applicable) + " grade-positive instances, exact equality";
    report(std::move(c));
}

// criterion 8: the classic closure value, independently confirmed
void criterion_classic_value() {
    Timer t;
    Criterion c{8, "classic quartic: closure adds exactly x^2*y^2, oracle-confirmed"};
    const MonomialIdeal classic = MonomialIdeal::make(
        2, {Monomial({4, 0}), Monomial({3, 1}), Monomial({1, 3}), Monomial({0, 4})});
    const MonomialIdeal expected = MonomialIdeal::make(
        2, {Monomial({4, 0}), Monomial({3, 1}), Monomial({2, 2}), Monomial({1, 3}),
            Monomial({0, 4})});
    const ClosureResult r = rr_ideal(classic);
    if (r.value.coord(0) != expected || !r.certified) {
        c.pass = false;
        c.note = "structural value differs from I + (x^2*y^2)";
    } else {
        const OracleClosure oc =
            oracle_closure_chain(classic, 1, MonomialSubmodule::zero(2, 1), 12, 5);
        const ModuleElement extra{0, Monomial({2, 2})};
        const TruncatedSet structural_trunc =
            truncate(r.value, oc.terms[0].degree_bound);
        if (!oc.terms[0].contains(extra) || !oc.value.contains(extra))
            c.pass = false, c.note = "oracle misses x^2*y^2 in (I^2 : I)";
        else if (oc.terms[0].members != structural_trunc.members)
            c.pass = false, c.note = "oracle disagrees on the full generator set";
    }
    c.seconds = t.seconds();
    if (c.pass) c.note = "D = 12, k_max = 5";
    report(std::move(c));
}

// criterion 9: structural vs oracle on the whole corpus
void criterion_oracle_equivalence(const std::vector<Instance>& corpus) {
    Timer t;
    Criterion c{9, "oracle cross-check: products, powers, colons, intersections, closure "
                   "chains, Ass"};
    long comparisons = 0;
    for (const Instance& inst : corpus) {
        const CrossCheckReport r = cross_check(inst, 12, 6);
        comparisons += static_cast<long>(r.entries.size());
        if (!r.all_agree) {
            c.pass = false;
            for (const auto& e : r.entries)
                if (!e.agree || e.inconclusive) {
                    c.note = e.op + (e.inconclusive ? " inconclusive" : " mismatch") +
                             (e.note.empty() ? "" : " (" + e.note + ")") + "\n" +
                             print_instance(inst);
                    break;
                }
            break;
        }
    }
    c.seconds = t.seconds();
    if (c.pass) c.note = std::to_string(comparisons) + " comparisons, zero mismatches";
    if (c.seconds > 600.0) {
        c.pass = false;
        c.note += " [runtime over the 10 minute budget]";
    }
    report(std::move(c));
}

// criterion 10: decomposition route vs colon-search route on cyclic quotients
void criterion_dual_ass(const std::vector<Instance>& corpus) {
    Timer t;
    Criterion c{10, "Ass via decomposition equals Ass via colon search on cyclic quotients"};
    long checked = 0;
    for (const Instance& inst : corpus) {
        std::vector<MonomialIdeal> quotients{inst.ideal_I, ideal_power(inst.ideal_I, 2)};
        quotients.push_back(rr_ideal(inst.ideal_I).value.coord(0));
        for (int i = 0; i < inst.relations.rank(); ++i) {
            const MonomialIdeal& ni = inst.relations.coord(i);
            if (!ni.is_unit()) quotients.push_back(ni);
        }
        for (const MonomialIdeal& v : quotients) {
            if (v.is_unit()) continue;
            ++checked;
            if (ass_cyclic(v) != ass_ideal_subquotient(MonomialIdeal::unit(v.dim()), v)) {
                c.pass = false;
                c.note = "disagreement on a cyclic quotient\n" + print_instance(inst);
                break;
            }
        }
        if (!c.pass) break;
    }
    c.seconds = t.seconds();
    if (c.pass) c.note = std::to_string(checked) + " cyclic quotients, 100% agreement";
    report(std::move(c));
}

} // namespace

int main() {
    const Timer total;
    std::printf("acceptance corpus: 200 instances (d <= 3, <= 4 generators, exponents <= 4, "
                "rank <= 2), seeds 42001..42200\n");
    const std::vector<Instance> corpus = make_corpus(200, 42001, kCorpusParams);
    const std::vector<Instance> rank1 =
        make_corpus(50, 77001, GenParams{3, 1, 4, 4, false, false});
    std::vector<Instance> rank1_plain;
    for (const Instance& inst : rank1) {
        Instance flat = inst;
        flat.relations = MonomialSubmodule::zero(flat.dim(), 1);
        rank1_plain.push_back(std::move(flat));
    }

    criterion_colon_identity(corpus);
    const std::vector<AssSequenceReport> closure_reports = criterion_increasing_sequence(corpus);
    criterion_successive(corpus);
    criterion_stable_equality(rank1_plain);
    criterion_stable_inclusion(corpus, closure_reports);
    criterion_reduction_suite();
    criterion_eventual_equality(corpus);
    criterion_classic_value();
    criterion_oracle_equivalence(corpus);
    criterion_dual_ass(corpus);

    int failures = 0;
    for (const Criterion& c : g_results)
        if (!c.pass) ++failures;
    std::printf("acceptance: %d/%zu criteria passed (%.1f s total)\n",
                static_cast<int>(g_results.size()) - failures, g_results.size(),
                total.seconds());
    return failures;
}
