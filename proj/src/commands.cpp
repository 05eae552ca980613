#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "minorperc/minorperc.hpp"

namespace minorperc::cli {

using nlohmann::json;

namespace {

CommandResult emit(json j, std::uint64_t seed) {
    j["seed"] = seed;
    return {j.dump(2) + "\n", 0};
}

json edges_json(const EdgeSet& es) {
    json a = json::array();
    for (const auto& e : es) a.push_back({e.u, e.v});
    return a;
}

json verdict_json(Verdict v) { return to_string(v); }

}  // namespace

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("MINORPERC_SEED")) {
        const std::string s(env);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("MINORPERC_SEED must be a non-negative integer");
        try {
            return std::stoull(s);
        } catch (const std::out_of_range&) {
            throw UsageError("MINORPERC_SEED out of range");
        }
    }
    return kDefaultSeed;
}

Graph resolve_graph(const std::string& source) {
    if (std::filesystem::is_regular_file(source)) return load_graph(source);
    return named_graph(source);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad integer '" + item + "' in list");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) throw UsageError("bad number '" + item + "' in list");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

CommandResult cmd_classify(const ClassifyArgs& a) {
    const Graph h = resolve_graph(a.h);
    ClassifyOptions opt;
    opt.t_max = a.t_max;
    opt.budget = Budget{a.budget};
    return emit(to_json(classify(parse_property(a.property), a.r, h, opt)), a.seed);
}

CommandResult cmd_tau(const std::string& h, std::uint64_t seed) {
    const auto res = tau(resolve_graph(h));
    return emit({{"tau", res.tau}, {"cover", res.cover}}, seed);
}

CommandResult cmd_minor(const MinorArgs& a) {
    const Graph g = resolve_graph(a.g), h = resolve_graph(a.h);
    const Depth depth = a.depth ? Depth::at_most(*a.depth) : Depth::unbounded();
    const auto res = contains_shallow_minor(g, h, depth, Budget{a.budget});
    json j{{"verdict", verdict_json(res.verdict)}, {"nodes", res.nodes}};
    j["depth"] = a.depth ? json(*a.depth) : json(nullptr);
    j["branch_sets"] = res.model ? json(res.model->branch_sets) : json(nullptr);
    return emit(j, a.seed);
}

CommandResult cmd_generate(const GenerateArgs& a) {
    const FamilySpec f = parse_family(a.family);
    if (a.bad_lists) {
        ListInstance inst;
        if (f.name == "joincliques") inst = gen_bad_lists_join(f.param("r"), f.param("w"));
        else if (f.name == "lt") inst = gen_bad_lists_Lt(f.param("r"));
        else throw UsageError("--bad-lists needs family joincliques or lt");
        return emit({{"family", f.str()}, {"graph", to_json(inst.graph)}, {"lists", inst.lists.lists}}, a.seed);
    }
    const Graph g = a.n ? family_instance(f, *a.n) : family_graph(f);
    if (a.format == "json") return emit({{"family", f.str()}, {"graph", to_json(g)}}, a.seed);
    if (a.format != "edgelist") throw UsageError("format must be edgelist or json");
    return {to_edge_list(g), 0};
}

CommandResult cmd_core(const std::string& gs, int r, std::uint64_t seed) {
    if (r < 1) throw UsageError("r must be positive");
    const Graph g = resolve_graph(gs);
    const Subgraph k = core(g, r);
    return emit({{"r", r},
                 {"degeneracy", degeneracy_order(g).degeneracy},
                 {"core_vertices", k.to_parent},
                 {"in_Dr", k.graph.order() == 0}},
                seed);
}

CommandResult cmd_color(const SearchArgs& a) {
    const auto res = chromatic_feasible(resolve_graph(a.g), a.r, Budget{a.budget});
    json j{{"r", a.r}, {"verdict", verdict_json(res.verdict)}, {"nodes", res.nodes}};
    j["coloring"] = res.verdict == Verdict::yes ? json(res.coloring) : json(nullptr);
    return emit(j, a.seed);
}

CommandResult cmd_choosable(const SearchArgs& a) {
    const auto res = choosable(resolve_graph(a.g), a.r);
    json j{{"r", a.r}, {"choosable", res.choosable}, {"assignments_checked", res.assignments_checked}};
    j["bad_assignment"] = res.bad_assignment ? json(res.bad_assignment->lists) : json(nullptr);
    return emit(j, a.seed);
}

CommandResult cmd_regular(const SearchArgs& a) {
    const auto res = has_r_regular_subgraph(resolve_graph(a.g), a.r, Budget{a.budget});
    json j{{"r", a.r}, {"verdict", verdict_json(res.verdict)}, {"nodes", res.nodes}};
    j["witness"] = res.verdict == Verdict::yes ? edges_json(res.witness) : json(nullptr);
    return emit(j, a.seed);
}

CommandResult cmd_percolate(const PercolateArgs& a) {
    const FamilySpec f = parse_family(a.family);
    const auto ns = parse_int_list(a.n_list);
    PropertySpec prop = PropertySpec::parse(a.property);
    prop.budget = Budget{a.budget};
    if (a.format != "csv" && a.format != "json") throw UsageError("format must be csv or json");
    if (a.fit && a.p_list) throw UsageError("--fit needs threshold mode (omit --p)");
    if (a.fit && ns.size() < 3) throw UsageError("--fit needs at least three values of n");
    if (a.trials == 0) throw UsageError("trials must be positive");
    const bool csv = a.format == "csv";
    std::string text;
    json rows = json::array();
    int code = 0;
    std::string abort_reason;

    if (a.p_list) {
        const auto ps = parse_double_list(*a.p_list);
        if (csv) text += sweep_csv_header();
        for (int n : ns) {
            const Graph g = family_instance(f, n);
            for (double p : ps) {
                const auto est = estimate(g, p, prop, a.trials, a.seed, a.workers);
                const SweepRow row{f.str(), n, est};
                if (csv) text += sweep_csv_row(row);
                rows.push_back({{"family", f.str()}, {"n", n}, {"p", p}, {"trials", est.trials},
                                {"successes", est.successes}, {"undecided", est.undecided}, {"phat", est.p_hat},
                                {"ci_lo", est.ci_lo}, {"ci_hi", est.ci_hi}, {"seed", est.seed}});
                if (est.undecided_fraction() >= kMaxUndecidedFraction) {
                    abort_reason = "undecided fraction " + std::to_string(est.undecided_fraction()) + " at n=" +
                                   std::to_string(n) + " p=" + std::to_string(p);
                    break;
                }
            }
            if (!abort_reason.empty()) break;
        }
    } else {
        if (csv) text += "family,n,threshold,boundary,trials,evaluations,seed\n";
        std::vector<std::pair<double, double>> fit_rows;
        for (int n : ns) {
            ThresholdResult th;
            try {
                th = empirical_threshold(family_instance(f, n), prop, a.trials, a.seed, a.tol, a.workers);
            } catch (const UndecidedError& e) {
                abort_reason = std::string(e.what()) + " at n=" + std::to_string(n);
                break;
            }
            char buf[256];
            std::snprintf(buf, sizeof buf, "%s,%d,%.10g,%d,%llu,%zu,%llu\n", f.str().c_str(), n, th.p_hat,
                          th.boundary ? 1 : 0, static_cast<unsigned long long>(a.trials), th.trace.size(),
                          static_cast<unsigned long long>(a.seed));
            if (csv) text += buf;
            rows.push_back({{"family", f.str()}, {"n", n}, {"threshold", th.p_hat}, {"boundary", th.boundary},
                            {"trials", a.trials}, {"evaluations", th.trace.size()}, {"seed", a.seed}});
            fit_rows.push_back({static_cast<double>(n), th.p_hat});
        }
        if (a.fit && abort_reason.empty()) {
            const SlopeFit sf = slope_fit(fit_rows);
            if (csv) {
                char buf[256];
                std::snprintf(buf, sizeof buf, "# fit slope=%.6f intercept=%.6f stderr=%.6f\n", sf.slope, sf.intercept,
                              sf.stderr_slope);
                text += buf;
            }
            rows = json{{"rows", rows}, {"fit", {{"slope", sf.slope}, {"intercept", sf.intercept}, {"stderr", sf.stderr_slope}}}};
        }
    }
    if (!abort_reason.empty()) {
        code = 1;
        if (csv) text += "# aborted: " + abort_reason + "\n";
    }
    if (csv) return {text, code};
    json j = rows.is_object() ? rows : json{{"rows", rows}};
    j["family"] = f.str();
    j["property"] = prop.str();
    j["mode"] = a.p_list ? "sweep" : "threshold";
    j["aborted"] = abort_reason.empty() ? json(nullptr) : json(abort_reason);
    auto out = emit(j, a.seed);
    out.exit_code = code;
    return out;
}

CommandResult cmd_signature(const SignatureArgs& a) {
    const Graph g = resolve_graph(a.g);
    if (a.r < 1) throw UsageError("r must be positive");
    SignatureCollection c;
    if (a.builder == "weak") {
        c = build_weak_collection(g, a.r, a.degree_bound.value_or(g.order() ? g.max_degree() : 0));
    } else if (a.builder == "none") {
        if (a.collection) c = collection_from_json(json::parse(read_file(*a.collection)));
        else c.q = a.r;
    } else {
        throw UsageError("builder must be weak or none");
    }
    json j{{"builder", a.builder}, {"r", a.r}, {"collection", to_json(c)}, {"size", c.members.size()}};
    j["verified"] = nullptr;
    j["exhaustive"] = nullptr;
    j["counterexample"] = nullptr;
    if (a.verify) {
        const VerifyReport rep = a.sampled ? verify_collection_sampled(g, c, a.r, *a.sampled, a.seed)
                                           : verify_collection(g, c, a.r);
        j["verified"] = rep.covers;
        j["exhaustive"] = rep.exhaustive;
        j["checked"] = rep.checked;
        if (rep.counterexample) j["counterexample"] = edges_json(*rep.counterexample);
    }
    return emit(j, a.seed);
}

CommandResult cmd_oracle_table(const std::string& h, int n_max, std::uint64_t seed) {
    const auto rows = extremal_table(resolve_graph(h), n_max);
    json out = json::array();
    for (const auto& r : rows) out.push_back({{"n", r.n}, {"f", r.f}, {"d", r.d}, {"graphs", r.graphs}});
    const auto chk = check_extremal_bounds(rows);
    return emit({{"rows", out}, {"bounds", {{"holds", chk.holds}, {"violations", chk.violations}}}}, seed);
}

}  // namespace minorperc::cli
