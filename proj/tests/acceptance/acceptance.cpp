// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers as
// arguments to run a subset. Always exits 0 once every criterion has run.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "minorperc/minorperc.hpp"
#include "support/oracles.hpp"

using namespace minorperc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<std::pair<std::string, Graph>> named_corpus() {
    std::vector<std::string> names{"petersen", "L4", "L5", "L6", "Lt4,2"};
    for (int n = 1; n <= 6; ++n) names.push_back("K" + std::to_string(n));
    for (int a = 1; a <= 6; ++a)
        for (int b = a; a * b <= 18; ++b) names.push_back("K" + std::to_string(a) + "," + std::to_string(b));
    for (int n = 3; n <= 18; ++n) names.push_back("C" + std::to_string(n));
    for (int n = 1; n <= 19; ++n) names.push_back("P" + std::to_string(n));
    for (int n = 1; n <= 6; ++n) names.push_back("I" + std::to_string(n));
    for (int s = 1; s <= 18; ++s) names.push_back("S" + std::to_string(s));
    std::vector<std::pair<std::string, Graph>> out;
    for (const auto& n : names) {
        Graph g = named_graph(n);
        if (g.size() <= 18) out.emplace_back(n, std::move(g));
    }
    return out;
}

std::vector<std::pair<std::string, Graph>> full_corpus() {
    auto out = named_corpus();
    for (std::uint64_t i = 0; i < 200; ++i) {
        const int n = 5 + static_cast<int>(i % 6);
        const int m = std::min(n * (n - 1) / 2, 6 + static_cast<int>((i * 7) % 11));
        out.emplace_back("random#" + std::to_string(i), oracle::random_graph(n, m, kDefaultSeed + i));
    }
    return out;
}

Outcome classification_table() {
    Outcome o;
    std::ostringstream bad;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            o.pass = false;
            bad << what << "; ";
        }
    };
    const auto k33 = classify_Dr(3, complete_bipartite(3, 3));
    expect(k33.case_id == "case3" && k33.q == 5, "Dr r=3 K3,3");
    const auto k5 = classify_Dr(4, complete_graph(5));
    expect(k5.case_id == "case4" && k5.q == 9, "Dr r=4 K5");
    for (int r = 2; r <= 3; ++r) {
        const auto c = classify_Dr(r, complete_graph(r + 2));
        expect(c.case_id == "case1" && c.q == r, "Dr r=" + std::to_string(r) + " K" + std::to_string(r + 2));
    }
    expect(classify_Dr(2, complete_graph(3)).tightness == Tightness::ThetaOne, "Dr r=2 K3");
    expect(classify_Dr(3, complete_graph(4)).tightness == Tightness::ThetaOne, "Dr r=3 K4");
    for (int r = 2; r <= 5; ++r)
        for (int s = 1; s <= r; ++s)
            expect(classify_Dr(r, complete_bipartite(1, s)).tightness == Tightness::ThetaOne,
                   "Dr r=" + std::to_string(r) + " K1," + std::to_string(s));
    expect(classify_chi(2, cycle_graph(4)).q == 3, "chi r=2 C4");
    expect(classify_Rr(2, complete_bipartite(1, 2)).tightness == Tightness::ThetaOne, "Rr r=2 K1,2");
    o.detail = o.pass ? "all table entries reproduced" : "mismatch: " + bad.str();
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    int graphs = 0, checks = 0;
    std::ostringstream bad;
    for (const auto& [name, g] : full_corpus()) {
        ++graphs;
        for (int r = 2; r <= 4; ++r) {
            ++checks;
            if (is_in_Dr(g, r) != enumerate_min_degree_subgraphs(g, r).empty()) {
                o.pass = false;
                bad << name << " r=" << r << " (Dr); ";
            }
            const auto c = build_weak_collection(g, r, std::max(g.max_degree(), 0));
            if (!verify_collection(g, c, r).covers) {
                o.pass = false;
                bad << name << " r=" << r << " (weak collection); ";
            }
        }
    }
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(checks) + " (graph, r) pairs" +
               (o.pass ? "" : "; disagreements: " + bad.str());
    return o;
}

Outcome certificates() {
    Outcome o;
    std::ostringstream d;
    for (auto [r, w] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 1}}) {
        const auto inst = gen_bad_lists_join(r, w);
        const Verdict v = list_color_feasible(inst.graph, inst.lists, Budget::unlimited()).verdict;
        d << "bad_lists(" << r << "," << w << ")=" << to_string(v) << " ";
        if (v != Verdict::no) o.pass = false;
    }
    const bool c4 = choosable(cycle_graph(4), 2).choosable;
    d << "C4 2-choosable=" << (c4 ? "yes" : "no") << " ";
    if (!c4) o.pass = false;
    const auto k23 = choosable(complete_bipartite(2, 3), 2);
    d << "K2,3 2-choosable=" << (k23.choosable ? "yes" : "no") << " (expected no)";
    if (k23.choosable) {
        o.pass = false;
        d << "; exhaustive search over " << k23.assignments_checked
          << " assignments finds every 2-list assignment colourable";
    }
    o.detail = d.str();
    return o;
}

Outcome percolation_exactness() {
    Outcome o;
    std::ostringstream d;
    const Graph k4 = complete_graph(4);
    const auto prop = PropertySpec::parse("degenerate:r=3");
    for (double p : {0.3, 0.5, 0.8909}) {
        const double exact = 1 - std::pow(p, 6);
        int inside = 0;
        for (std::uint64_t rep = 0; rep < 100; ++rep) {
            const auto est = estimate(k4, p, prop, 10000, kDefaultSeed + rep * 10000);
            inside += est.ci_lo <= exact && exact <= est.ci_hi;
        }
        d << "p=" << p << ": " << inside << "/100 inside; ";
        if (inside < 94) o.pass = false;
    }
    const auto th = empirical_threshold(k4, prop, 10000, kDefaultSeed);
    const double target = std::pow(0.5, 1.0 / 6);
    d << "threshold " << th.p_hat << " vs " << target;
    if (std::abs(th.p_hat - target) > 0.01) o.pass = false;
    o.detail = d.str();
    return o;
}

Outcome exponent_check() {
    Outcome o;
    std::ostringstream d;
    auto run = [&](const std::string& family, int r, double lo, double hi) {
        const auto f = parse_family(family);
        std::vector<std::pair<double, double>> rows;
        for (int n : {200, 400, 800, 1600}) {
            const auto th = empirical_threshold(family_instance(f, n), PropertySpec{PropertyKind::degenerate, r, {}}, 2000,
                                                kDefaultSeed);
            rows.push_back({static_cast<double>(n), th.p_hat});
        }
        const double s = slope_fit(rows).slope;
        d << family << " slope " << s << " in [" << lo << "," << hi << "]; ";
        if (s < lo || s > hi) o.pass = false;
    };
    run("joincliques:r=3,w=1", 3, -0.25, -0.15);
    run("kbip:r=2", 2, -0.55, -0.45);
    o.detail = d.str();
    return o;
}

Outcome union_bound() {
    Outcome o;
    std::ostringstream d;
    const Graph k4 = complete_graph(4);
    const auto c = build_weak_collection(k4, 2, 3);
    for (double p : {0.1, 0.3, 0.5}) {
        const auto rep = union_bound_check(k4, c, p, 10000, kDefaultSeed);
        const double exact = oracle::inclusion_exclusion(c.members, p);
        const bool in_ci = rep.estimate.ci_lo <= exact && exact <= rep.estimate.ci_hi;
        d << "p=" << p << ": est " << rep.estimate.p_hat << ", exact " << exact << ", bound " << rep.bound << "; ";
        if (!rep.holds || !in_ci) o.pass = false;
    }
    o.detail = d.str();
    return o;
}

Outcome island_contract() {
    Outcome o;
    int runs = 0, successes = 0;
    std::ostringstream bad;
    const Rational beta(1, 10);
    const int d = 4;
    for (std::uint64_t i = 0; i < 50; ++i) {
        Graph g;
        if (i % 2 == 0) g = oracle::random_forest(20 + static_cast<int>(i % 7) * 5, kDefaultSeed + i);
        else {
            const int r = 2 + static_cast<int>(i % 3), w = static_cast<int>(i % 2);
            g = gen_join_cliques(r, w, 3 + static_cast<int>(i % 5));
        }
        for (int r = 2; r <= 3; ++r)
            for (int ell = 0; ell <= 1; ++ell) {
                ++runs;
                const auto res = island_partition(g, r, ell, d, beta);
                if (res.rounds > island_round_limit(r, ell)) {
                    o.pass = false;
                    bad << "graph " << i << " exceeded the round limit; ";
                }
                if (!res.success) continue;
                ++successes;
                const auto chk = oracle::check_island(g, r, ell, d, beta.num(), beta.den(), res.x, res.z);
                if (!chk.ok) {
                    o.pass = false;
                    bad << "graph " << i << " r=" << r << " ell=" << ell << ": " << chk.failure << "; ";
                }
            }
    }
    o.detail = std::to_string(runs) + " runs, " + std::to_string(successes) + " successes checked" +
               (o.pass ? "" : "; " + bad.str());
    return o;
}

Outcome extremal_bounds() {
    Outcome o;
    std::ostringstream d;
    for (int k : {3, 4}) {
        const auto rows = extremal_table(complete_graph(k), 6);
        const auto chk = check_extremal_bounds(rows);
        d << "K" << k << ": f=";
        for (const auto& r : rows) d << r.f << (r.n < 6 ? "," : "");
        d << " d=";
        for (const auto& r : rows) d << r.d << (r.n < 6 ? "," : "");
        d << "; ";
        if (!chk.holds) o.pass = false;
        if (k == 3)
            for (const auto& r : rows)
                if (r.f != r.n - 1) o.pass = false;
    }
    o.detail = d.str();
    return o;
}

Outcome clique_bound() {
    Outcome o;
    int checks = 0;
    std::ostringstream bad;
    for (const auto& [name, g] : full_corpus()) {
        const Rational mad = max_average_degree(g);
        for (int r = 2; r <= 4; ++r) {
            ++checks;
            const Rational bound = generalized_binomial(mad, r - 1) * Rational(g.order());
            if (Rational(static_cast<std::int64_t>(count_cliques(g, r))) > bound) {
                o.pass = false;
                bad << name << " r=" << r << "; ";
            }
        }
    }
    o.detail = std::to_string(checks) + " (graph, r) pairs" + (o.pass ? "" : "; violations: " + bad.str());
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"classification table", classification_table},   {"oracle equivalence", oracle_equivalence},
        {"list certificates", certificates}, {"percolation exactness", percolation_exactness},
        {"exponent slopes", exponent_check}, {"union bound", union_bound},
        {"island contract", island_contract}, {"extremal bounds", extremal_bounds},
        {"clique bound", clique_bound}};
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d criteria failed\n", failed);
    return 0;
}
