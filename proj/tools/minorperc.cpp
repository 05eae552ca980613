#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "minorperc/io.hpp"

using namespace minorperc::cli;

namespace {

struct Common {
    std::optional<std::uint64_t> seed;
    std::string out;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "RNG seed (default: MINORPERC_SEED or built-in)");
    sub->add_option("-o,--out", c.out, "Write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minorperc: threshold classification, constructions and percolation for minor-closed classes"};
    app.require_subcommand(1);
    Common common;
    std::function<CommandResult()> run;

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Threshold exponent for a property and forbidden minor H");
    classify->add_option("--r", ca.r, "Parameter r")->required();
    classify->add_option("--H", ca.h, "Forbidden minor: built-in name or graph file")->required();
    classify->add_option("--property", ca.property, "degenerate|choosable|colorable|noregular");
    classify->add_option("--t-max", ca.t_max, "Wedge multiplicity for pedal minor tests");
    classify->add_option("--budget", ca.budget, "Node budget per minor test");
    add_common(classify, common);
    classify->callback([&] { run = [&] { ca.seed = resolve_seed(common.seed); return cmd_classify(ca); }; });

    std::string tau_h;
    auto* tau = app.add_subcommand("tau", "Minimum vertex cover");
    tau->add_option("--H", tau_h, "Graph")->required();
    add_common(tau, common);
    tau->callback([&] { run = [&] { return cmd_tau(tau_h, resolve_seed(common.seed)); }; });

    MinorArgs ma;
    auto* minor = app.add_subcommand("minor", "Does G contain H as a (shallow) minor");
    minor->add_option("--G", ma.g, "Host graph")->required();
    minor->add_option("--H", ma.h, "Pattern graph")->required();
    minor->add_option("--depth", ma.depth, "Branch-set radius bound");
    minor->add_option("--budget", ma.budget, "Node budget");
    add_common(minor, common);
    minor->callback([&] { run = [&] { ma.seed = resolve_seed(common.seed); return cmd_minor(ma); }; });

    GenerateArgs ga;
    auto* generate = app.add_subcommand("generate", "Emit a family member");
    generate->add_option("--family", ga.family, "Family spec, e.g. joincliques:r=3,w=1,t=4")->required();
    generate->add_option("--n", ga.n, "Largest member on at most n vertices, padded");
    generate->add_option("--format", ga.format, "edgelist|json");
    generate->add_flag("--bad-lists", ga.bad_lists, "Emit r-lists with no proper colouring (joincliques, lt)");
    add_common(generate, common);
    generate->callback([&] { run = [&] { ga.seed = resolve_seed(common.seed); return cmd_generate(ga); }; });

    std::string core_g;
    int core_r = 2;
    auto* core = app.add_subcommand("core", "r-core and degeneracy");
    core->add_option("--G", core_g, "Graph")->required();
    core->add_option("--r", core_r, "Core order")->required();
    add_common(core, common);
    core->callback([&] { run = [&] { return cmd_core(core_g, core_r, resolve_seed(common.seed)); }; });

    SearchArgs sa;
    auto add_search = [&](const std::string& name, const std::string& help, CommandResult (*fn)(const SearchArgs&)) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("--G", sa.g, "Graph")->required();
        s->add_option("--r", sa.r, "Parameter r")->required();
        if (name != "choosable") s->add_option("--budget", sa.budget, "Node budget");
        add_common(s, common);
        s->callback([&, fn] { run = [&, fn] { sa.seed = resolve_seed(common.seed); return fn(sa); }; });
    };
    add_search("color", "Proper r-colouring", cmd_color);
    add_search("choosable", "Exhaustive r-choosability", cmd_choosable);
    add_search("regular", "r-regular subgraph", cmd_regular);

    PercolateArgs pa;
    auto* perc = app.add_subcommand("percolate", "Monte Carlo sweeps or thresholds over a family");
    perc->add_option("--family", pa.family, "Family spec")->required();
    perc->add_option("--n", pa.n_list, "Comma-separated orders")->required();
    perc->add_option("--p", pa.p_list, "Comma-separated edge probabilities (sweep mode)");
    perc->add_option("--property", pa.property, "e.g. degenerate:r=3");
    perc->add_option("--trials", pa.trials, "Trials per point");
    perc->add_option("--workers", pa.workers, "Worker threads")->check(CLI::PositiveNumber);
    perc->add_option("--tol", pa.tol, "Bisection tolerance");
    perc->add_option("--budget", pa.budget, "Node budget per decision");
    perc->add_option("--format", pa.format, "csv|json");
    perc->add_flag("--fit", pa.fit, "Append a log-log slope fit of the thresholds");
    add_common(perc, common);
    perc->callback([&] { run = [&] { pa.seed = resolve_seed(common.seed); return cmd_percolate(pa); }; });

    SignatureArgs sg;
    auto* sig = app.add_subcommand("signature", "Build and verify a signature collection");
    sig->add_option("--G", sg.g, "Graph")->required();
    sig->add_option("--r", sg.r, "Parameter r")->required();
    sig->add_option("--builder", sg.builder, "weak|none");
    sig->add_option("--collection", sg.collection, "Collection JSON (builder none)");
    sig->add_option("--degree-bound", sg.degree_bound, "Degree bound for the weak builder");
    sig->add_flag("--verify", sg.verify, "Check the covering property");
    sig->add_option("--sampled", sg.sampled, "Verify on this many random subgraphs instead of exhaustively");
    add_common(sig, common);
    sig->callback([&] { run = [&] { sg.seed = resolve_seed(common.seed); return cmd_signature(sg); }; });

    std::string ot_h;
    int ot_n = 6;
    auto* ot = app.add_subcommand("oracle-table", "Extremal edge counts and degeneracy of H-minor-free graphs");
    ot->add_option("--H", ot_h, "Forbidden minor")->required();
    ot->add_option("--n-max", ot_n, "Largest order (at most 7)");
    add_common(ot, common);
    ot->callback([&] { run = [&] { return cmd_oracle_table(ot_h, ot_n, resolve_seed(common.seed)); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const CommandResult res = run();
        if (common.out.empty()) std::cout << res.text;
        else {
            std::ofstream f(common.out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + common.out);
            f << res.text;
        }
        return res.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const minorperc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
