// Command-line front end: parses instance files, dispatches to the library,
// and renders reports as text, JSON, or CSV.

#include "rrtk/oracle.hpp"
#include "rrtk/reduction.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string instance_path;
    int nmax = 6;
    int window = rrtk::kDefaultWindow;
    int cap = rrtk::kDefaultCap;
    int n = 1;
    int m = 1;
    rrtk::Exponent truncation_degree = 12;
    std::uint64_t seed = 1;
    int count = 0;
    std::string format = "text";
    std::string out_path;
};

rrtk::Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rrtk::error("cannot open instance file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return rrtk::parse_instance(buf.str());
}

std::vector<std::vector<std::string>> primes_as_lists(const rrtk::PrimeSet& ps,
                                                      const std::vector<std::string>& vars) {
    std::vector<std::vector<std::string>> out;
    for (const rrtk::MonomialPrime& p : ps) {
        std::vector<std::string> names;
        for (int j : p.vars) names.push_back(vars.at(static_cast<std::size_t>(j)));
        out.push_back(std::move(names));
    }
    return out;
}

std::string primes_text(const rrtk::PrimeSet& ps, const std::vector<std::string>& vars) {
    if (ps.empty()) return "{}";
    std::string out;
    for (const rrtk::MonomialPrime& p : ps) {
        if (!out.empty()) out += " ";
        out += rrtk::to_string(p, vars);
    }
    return out;
}

std::vector<std::string> submodule_strings(const rrtk::MonomialSubmodule& w,
                                           const std::vector<std::string>& vars) {
    std::vector<std::string> out;
    for (int i = 0; i < w.rank(); ++i)
        for (const rrtk::Monomial& g : w.coord(i).gens()) {
            std::string s = "e" + std::to_string(i + 1);
            if (!g.is_one()) s += "*" + rrtk::to_string(g, vars);
            out.push_back(std::move(s));
        }
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (const std::string& s : v) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

void write_output(const CommonOpts& opts, const std::string& body) {
    if (opts.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw rrtk::error("cannot open output file '" + opts.out_path + "'");
    out << body;
}

json make_envelope(const rrtk::Instance& inst, const std::string& command, json params) {
    json j;
    j["instance"] = rrtk::print_instance(inst);
    j["command"] = command;
    j["params"] = std::move(params);
    return j;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

// ---- per-command runners; each returns the process exit code ----

int run_closure(const CommonOpts& opts) {
    const rrtk::Instance inst = load_instance(opts.instance_path);
    const rrtk::ClosureResult r =
        rrtk::rr_power(inst.ideal_I, opts.n, inst.presentation(), opts.window, opts.cap);
    const auto value = submodule_strings(r.value, inst.vars);

    if (opts.format == "json") {
        json j = make_envelope(inst, "closure",
                               {{"n", opts.n}, {"window", opts.window}, {"cap", opts.cap}});
        j["results"] = json::object();
        j["results"]["value"] = value;
        json chain = json::array();
        for (const auto& term : r.chain) chain.push_back(submodule_strings(term, inst.vars));
        j["results"]["chain"] = chain;
        j["flags"] = {{"certified", r.certified},
                      {"stabilized_at", r.stabilized_at ? json(*r.stabilized_at) : json()},
                      {"window", r.window_used},
                      {"cap", r.cap_used}};
        write_output(opts, render_json(j));
    } else if (opts.format == "csv") {
        std::string body = "k,generators\n";
        for (std::size_t k = 0; k < r.chain.size(); ++k)
            body += std::to_string(k + 1) + ",\"" +
                    join(submodule_strings(r.chain[k], inst.vars), " ") + "\"\n";
        body += "value,\"" + join(value, " ") + "\"\n";
        write_output(opts, body);
    } else {
        std::string body = "closure of I^" + std::to_string(opts.n) + " in E\n";
        body += "value: " + join(value, ", ") + "\n";
        body += "chain terms: " + std::to_string(r.chain.size()) + "\n";
        body += "certified: " + std::string(r.certified ? "yes" : "no");
        if (r.stabilized_at) body += " (stable from k=" + std::to_string(*r.stabilized_at) + ")";
        body += "\n";
        write_output(opts, body);
    }
    return 0;
}

int run_sequence(const CommonOpts& opts, const std::string& command) {
    const rrtk::Instance inst = load_instance(opts.instance_path);
    rrtk::AssSequenceReport r;
    if (command == "ass-seq")
        r = rrtk::ass_rr_sequence(inst.ideal_I, inst.presentation(), opts.nmax, opts.window,
                                  opts.cap);
    else if (command == "power-seq")
        r = rrtk::ass_power_sequence(inst.ideal_I, inst.presentation(), opts.nmax);
    else
        r = rrtk::ass_successive_rr(inst.ideal_I, inst.presentation(), opts.nmax, opts.window,
                                    opts.cap);

    if (opts.format == "json") {
        json j = make_envelope(inst, command,
                               {{"nmax", opts.nmax}, {"window", opts.window}, {"cap", opts.cap}});
        json rows = json::array();
        for (int n = 1; n <= r.n_max(); ++n) {
            const bool degen = std::find(r.degenerate_indices.begin(),
                                         r.degenerate_indices.end(),
                                         n) != r.degenerate_indices.end();
            rows.push_back({{"n", n},
                            {"primes", primes_as_lists(r.at(n), inst.vars)},
                            {"degenerate", degen}});
        }
        j["results"] = rows;
        j["flags"] = {
            {"increasing", r.increasing},
            {"stabilization_candidate",
             r.stabilization_candidate ? json(*r.stabilization_candidate) : json()},
            {"certified", r.certified},
            {"closure_certified", r.closure_certified},
            {"stable", primes_as_lists(r.stable_set, inst.vars)}};
        write_output(opts, render_json(j));
    } else if (opts.format == "csv") {
        std::string body = "n,primes\n";
        for (int n = 1; n <= r.n_max(); ++n)
            body += std::to_string(n) + ",\"" + primes_text(r.at(n), inst.vars) + "\"\n";
        write_output(opts, body);
    } else {
        std::string body = "n  Ass\n";
        for (int n = 1; n <= r.n_max(); ++n)
            body += std::to_string(n) + "  " + primes_text(r.at(n), inst.vars) + "\n";
        body += "increasing: " + std::string(r.increasing ? "yes" : "no") + "\n";
        body += "stabilization candidate: ";
        body += r.stabilization_candidate ? "n0=" + std::to_string(*r.stabilization_candidate)
                                          : std::string("none");
        body += "\ncertified: " + std::string(r.certified ? "yes" : "no") +
                ", closures certified: " + (r.closure_certified ? "yes" : "no") + "\n";
        if (!r.degenerate_indices.empty()) {
            body += "degenerate indices:";
            for (int n : r.degenerate_indices) body += " " + std::to_string(n);
            body += "\n";
        }
        write_output(opts, body);
    }
    // The closure-power and successive sequences must increase; the
    // ordinary-power sequence merely eventually stabilizes, so it reports.
    if (command != "power-seq" && !r.increasing) return 1;
    return 0;
}

int run_lemma21(const CommonOpts& opts) {
    const rrtk::Instance inst = load_instance(opts.instance_path);
    const rrtk::ColonIdentityReport r = rrtk::colon_identity_check(
        inst.ideal_I, inst.presentation(), opts.n, opts.m, opts.window, opts.cap);

    if (opts.format == "json") {
        json j = make_envelope(inst, "lemma21",
                               {{"n", opts.n}, {"m", opts.m}, {"window", opts.window},
                                {"cap", opts.cap}});
        j["results"] = {
            {"colon_by_closure", submodule_strings(r.colon_by_closure, inst.vars)},
            {"colon_by_power", submodule_strings(r.colon_by_power, inst.vars)},
            {"shifted_closure", submodule_strings(r.shifted_closure, inst.vars)}};
        j["flags"] = {{"equal", r.all_equal}, {"certified", r.closures_certified}};
        write_output(opts, render_json(j));
    } else if (opts.format == "csv") {
        std::string body = "side,generators\n";
        body += "colon_by_closure,\"" + join(submodule_strings(r.colon_by_closure, inst.vars), " ") + "\"\n";
        body += "colon_by_power,\"" + join(submodule_strings(r.colon_by_power, inst.vars), " ") + "\"\n";
        body += "shifted_closure,\"" + join(submodule_strings(r.shifted_closure, inst.vars), " ") + "\"\n";
        write_output(opts, body);
    } else {
        std::string body;
        body += "colon by closure:  " + join(submodule_strings(r.colon_by_closure, inst.vars), ", ") + "\n";
        body += "colon by power:    " + join(submodule_strings(r.colon_by_power, inst.vars), ", ") + "\n";
        body += "shifted closure:   " + join(submodule_strings(r.shifted_closure, inst.vars), ", ") + "\n";
        body += "three-way equality: " + std::string(r.all_equal ? "PASS" : "FAIL") + "\n";
        write_output(opts, body);
    }
    return r.all_equal ? 0 : 1;
}

int run_reduction(const CommonOpts& opts) {
    const rrtk::Instance inst = load_instance(opts.instance_path);
    if (!inst.submodule_N1 || !inst.submodule_N2)
        throw rrtk::error("the reduction command needs submodules N1 and N2 in the instance");
    const rrtk::ReductionVerdict v =
        rrtk::is_rr_reduction(*inst.submodule_N1, *inst.submodule_N2, inst.ideal_I,
                              inst.presentation(), opts.window, opts.cap);
    std::optional<int> uniform;
    if (v.holds)
        uniform = rrtk::uniform_reduction_index(*inst.submodule_N1, *inst.submodule_N2,
                                                inst.ideal_I, inst.presentation(), opts.cap);

    auto element_str = [&](const rrtk::ModuleElement& e) {
        std::string s = "e" + std::to_string(e.coord + 1);
        if (!e.mono.is_one()) s += "*" + rrtk::to_string(e.mono, inst.vars);
        return s;
    };

    if (opts.format == "json") {
        json j = make_envelope(inst, "reduction",
                               {{"window", opts.window}, {"cap", opts.cap}});
        j["results"] = {
            {"holds", v.holds},
            {"witness_index", v.witness_index ? json(*v.witness_index) : json()},
            {"counterexample", v.counterexample ? json(element_str(*v.counterexample)) : json()},
            {"uniform_index", uniform ? json(*uniform) : json()}};
        j["flags"] = {{"certified", v.certified}};
        write_output(opts, render_json(j));
    } else {
        std::string body = "N1 is a Ratliff-Rush reduction of N2 w.r.t. I: ";
        body += v.holds ? "yes" : "no";
        body += "\n";
        if (v.witness_index) body += "witness index: " + std::to_string(*v.witness_index) + "\n";
        if (uniform) body += "uniform index: " + std::to_string(*uniform) + "\n";
        if (v.counterexample) body += "counterexample: " + element_str(*v.counterexample) + "\n";
        body += "certified: " + std::string(v.certified ? "yes" : "no (up to cap)") + "\n";
        write_output(opts, body);
    }
    return 0;
}

int run_grade(const CommonOpts& opts) {
    const rrtk::Instance inst = load_instance(opts.instance_path);
    const bool positive = rrtk::grade_positive(inst.ideal_I, inst.presentation());
    if (opts.format == "json") {
        json j = make_envelope(inst, "grade", json::object());
        j["results"] = {{"grade_positive", positive}};
        j["flags"] = json::object();
        write_output(opts, render_json(j));
    } else {
        write_output(opts, std::string("grade(I, E) > 0: ") + (positive ? "yes" : "no") + "\n");
    }
    return 0;
}

int run_cor25(const CommonOpts& opts) {
    const rrtk::Instance inst = load_instance(opts.instance_path);
    if (inst.rank != 1 || !inst.relations.is_zero())
        throw rrtk::error("cor25 requires E = R (rank 1, no relations)");
    const rrtk::StableAssEqualityReport r = rrtk::stable_ass_equality_check(
        inst.ideal_I, opts.nmax, opts.window, opts.cap);

    if (opts.format == "json") {
        json j = make_envelope(inst, "cor25",
                               {{"nmax", opts.nmax}, {"window", opts.window}, {"cap", opts.cap}});
        json rows = json::array();
        for (int n = 1; n <= opts.nmax; ++n)
            rows.push_back({{"n", n},
                            {"top", primes_as_lists(r.top.at(n), inst.vars)},
                            {"successive", primes_as_lists(r.successive.at(n), inst.vars)},
                            {"equal", r.top.at(n) == r.successive.at(n)}});
        j["results"] = rows;
        j["flags"] = {{"equal_from", r.equal_from ? json(*r.equal_from) : json()},
                      {"found", r.found}};
        write_output(opts, render_json(j));
    } else {
        std::string body = "n  Ass(R/closure)  Ass(successive)\n";
        for (int n = 1; n <= opts.nmax; ++n)
            body += std::to_string(n) + "  " + primes_text(r.top.at(n), inst.vars) + "  " +
                    primes_text(r.successive.at(n), inst.vars) + "\n";
        body += r.found ? "equal from n0=" + std::to_string(*r.equal_from) + "\n"
                        : "no equality tail within nmax\n";
        write_output(opts, body);
    }
    return r.found ? 0 : 1;
}

int run_eventual_eq(const CommonOpts& opts) {
    const rrtk::Instance inst = load_instance(opts.instance_path);
    const rrtk::EventualEqualityReport r = rrtk::eventual_equality_check(
        inst.ideal_I, inst.presentation(), opts.nmax, opts.window, opts.cap);

    if (opts.format == "json") {
        json j = make_envelope(inst, "eventual-eq",
                               {{"nmax", opts.nmax}, {"window", opts.window}, {"cap", opts.cap}});
        json rows = json::array();
        for (std::size_t i = 0; i < r.equal_at.size(); ++i)
            rows.push_back({{"n", i + 1}, {"equal", static_cast<bool>(r.equal_at[i])}});
        j["results"] = rows;
        j["flags"] = {{"stable_from", r.stable_from ? json(*r.stable_from) : json()},
                      {"found", r.found},
                      {"closure_certified", r.closure_certified}};
        write_output(opts, render_json(j));
    } else {
        std::string body = "n  closure == power\n";
        for (std::size_t i = 0; i < r.equal_at.size(); ++i)
            body += std::to_string(i + 1) + "  " + (r.equal_at[i] ? "yes" : "no") + "\n";
        body += r.found ? "equal from n0=" + std::to_string(*r.stable_from) + "\n"
                        : "no equality tail within nmax\n";
        write_output(opts, body);
    }
    return r.found ? 0 : 1;
}

int run_verify(const CommonOpts& opts) {
    const rrtk::Instance inst = load_instance(opts.instance_path);
    const rrtk::CrossCheckReport r =
        rrtk::cross_check(inst, opts.truncation_degree, 6, opts.window, opts.cap);

    if (opts.format == "json") {
        json j = make_envelope(inst, "verify",
                               {{"truncation_degree", opts.truncation_degree},
                                {"window", opts.window},
                                {"cap", opts.cap}});
        json rows = json::array();
        for (const auto& e : r.entries)
            rows.push_back({{"op", e.op},
                            {"agree", e.agree},
                            {"inconclusive", e.inconclusive},
                            {"degree", e.used_degree},
                            {"note", e.note}});
        j["results"] = rows;
        j["flags"] = {{"all_agree", r.all_agree}};
        write_output(opts, render_json(j));
    } else {
        std::string body;
        for (const auto& e : r.entries) {
            body += (e.agree ? "PASS  " : e.inconclusive ? "INCONCLUSIVE  " : "FAIL  ");
            body += e.op;
            if (!e.note.empty()) body += " (" + e.note + ")";
            body += "\n";
        }
        body += r.all_agree ? "verify: all comparisons agree\n" : "verify: FAILURE\n";
        if (!r.all_agree && !r.reproducer.empty())
            body += "reproducer:\n" + r.reproducer;
        write_output(opts, body);
    }
    return r.all_agree ? 0 : 1;
}

int run_props(const CommonOpts& opts) {
    rrtk::ReductionSuiteConfig cfg;
    cfg.seed = opts.seed;
    if (opts.count > 0) cfg.samples_per_item = opts.count;
    cfg.window = opts.window;
    cfg.cap = opts.cap;
    const rrtk::ReductionSuiteReport r = rrtk::reduction_property_suite(cfg);

    if (opts.format == "json") {
        json j;
        j["command"] = "props";
        j["params"] = {{"seed", opts.seed}, {"count", cfg.samples_per_item}};
        json rows = json::array();
        for (const auto& item : r.items)
            rows.push_back({{"item", item.name},
                            {"sampled", item.sampled},
                            {"pass", item.pass},
                            {"detail", item.detail},
                            {"counterexample",
                             item.counterexample ? json(*item.counterexample) : json()}});
        j["results"] = rows;
        j["flags"] = {{"all_pass", r.all_pass}};
        write_output(opts, render_json(j));
    } else {
        std::string body;
        for (const auto& item : r.items) {
            body += (item.pass ? "PASS  " : "FAIL  ");
            body += item.name + " (" + item.detail + ")\n";
            if (item.counterexample) body += *item.counterexample + "\n";
        }
        write_output(opts, body);
    }
    return r.all_pass ? 0 : 1;
}

int run_gen(const CommonOpts& opts) {
    const int count = opts.count > 0 ? opts.count : 1;
    const std::filesystem::path dir = opts.out_path.empty() ? "." : opts.out_path;
    std::filesystem::create_directories(dir);
    rrtk::GenParams params;
    params.with_reduction_pair = true;
    std::vector<std::string> files;
    for (int k = 0; k < count; ++k) {
        const rrtk::Instance inst = rrtk::gen_random(opts.seed + static_cast<std::uint64_t>(k),
                                                     params);
        const std::filesystem::path file =
            dir / ("instance_" + std::to_string(opts.seed) + "_" + std::to_string(k) + ".rr");
        std::ofstream out(file);
        if (!out) throw rrtk::error("cannot write '" + file.string() + "'");
        out << rrtk::print_instance(inst);
        files.push_back(file.string());
    }
    if (opts.format == "json") {
        json j;
        j["command"] = "gen";
        j["params"] = {{"seed", opts.seed}, {"count", count}};
        j["results"] = {{"files", files}};
        j["flags"] = json::object();
        std::cout << render_json(j);
    } else {
        for (const std::string& f : files) std::cout << f << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ratliff-Rush closures, associated-prime sequences and reductions "
                 "for monomial ideals and monomial modules"};
    app.require_subcommand(1);

    CommonOpts opts;
    const std::vector<std::string> with_instance = {
        "closure", "ass-seq", "power-seq", "quotient-seq", "lemma21",
        "reduction", "grade", "cor25", "eventual-eq", "verify"};
    const std::vector<std::string> all_commands = [&] {
        std::vector<std::string> v = with_instance;
        v.push_back("props");
        v.push_back("gen");
        return v;
    }();

    for (const std::string& name : all_commands) {
        CLI::App* sub = app.add_subcommand(name);
        if (std::find(with_instance.begin(), with_instance.end(), name) != with_instance.end())
            sub->add_option("instance", opts.instance_path, "instance file")->required();
        sub->add_option("--nmax", opts.nmax, "largest power index");
        sub->add_option("--window", opts.window, "stabilization window");
        sub->add_option("--cap", opts.cap, "chain cap");
        sub->add_option("--n", opts.n, "power index n");
        sub->add_option("--m", opts.m, "power index m");
        sub->add_option("--truncation-degree", opts.truncation_degree, "oracle degree bound");
        sub->add_option("--seed", opts.seed, "random seed");
        sub->add_option("--count", opts.count, "how many samples / files");
        sub->add_option("--format", opts.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", opts.out_path, "output path");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "closure") return run_closure(opts);
        if (command == "ass-seq" || command == "power-seq" || command == "quotient-seq")
            return run_sequence(opts, command);
        if (command == "lemma21") return run_lemma21(opts);
        if (command == "reduction") return run_reduction(opts);
        if (command == "grade") return run_grade(opts);
        if (command == "cor25") return run_cor25(opts);
        if (command == "eventual-eq") return run_eventual_eq(opts);
        if (command == "verify") return run_verify(opts);
        if (command == "props") return run_props(opts);
        if (command == "gen") return run_gen(opts);
    } catch (const rrtk::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
