// Bernoulli bond percolation: seeded sampling, Monte-Carlo estimates with
// Wilson intervals, threshold bisection and finite-size slope fits.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "minorperc/coloring.hpp"
#include "minorperc/common.hpp"
#include "minorperc/degeneracy.hpp"
#include "minorperc/graph.hpp"
#include "minorperc/regular.hpp"

namespace minorperc {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in [0,1) determined by (seed, edge index) alone.
inline double edge_uniform(std::uint64_t seed, std::uint64_t edge_index) {
    const std::uint64_t h = splitmix64(splitmix64(seed) ^ (edge_index * 0xd1342543de82ef95ULL + 1));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0,1]");
}

// kept[i] for edge i of g.
inline std::vector<char> sample_mask(const Graph& g, double p, std::uint64_t seed) {
    check_probability(p);
    std::vector<char> kept(g.size());
    for (int i = 0; i < g.size(); ++i) kept[i] = edge_uniform(seed, static_cast<std::uint64_t>(i)) < p;
    return kept;
}

inline Graph sample_subgraph(const Graph& g, double p, std::uint64_t seed) {
    const auto kept = sample_mask(g, p, seed);
    std::vector<Edge> e;
    for (int i = 0; i < g.size(); ++i)
        if (kept[i]) e.push_back(g.edges()[i]);
    return Graph(g.order(), std::move(e));
}

enum class PropertyKind { degenerate, colorable, choosable, no_regular };

struct PropertySpec {
    PropertyKind kind = PropertyKind::degenerate;
    int r = 2;
    Budget budget{};

    std::string str() const {
        switch (kind) {
            case PropertyKind::degenerate: return "degenerate:r=" + std::to_string(r);
            case PropertyKind::colorable: return "colorable:r=" + std::to_string(r);
            case PropertyKind::choosable: return "choosable:r=" + std::to_string(r);
            case PropertyKind::no_regular: return "noregular:r=" + std::to_string(r);
        }
        return "?";
    }

    // "degenerate:r=3" and friends.
    static PropertySpec parse(const std::string& s) {
        const auto colon = s.find(':');
        if (colon == std::string::npos || s.compare(colon + 1, 2, "r=") != 0)
            throw std::invalid_argument("property must look like degenerate:r=3");
        PropertySpec p;
        const std::string name = s.substr(0, colon);
        if (name == "degenerate") p.kind = PropertyKind::degenerate;
        else if (name == "colorable") p.kind = PropertyKind::colorable;
        else if (name == "choosable") p.kind = PropertyKind::choosable;
        else if (name == "noregular") p.kind = PropertyKind::no_regular;
        else throw std::invalid_argument("unknown property '" + name + "'");
        try {
            std::size_t used = 0;
            p.r = std::stoi(s.substr(colon + 3), &used);
            if (used != s.size() - colon - 3) throw std::invalid_argument("");
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad r in property '" + s + "'");
        }
        if (p.r < 1) throw std::invalid_argument("property needs r >= 1");
        return p;
    }
};

inline Verdict decide(const PropertySpec& prop, const Graph& g) {
    switch (prop.kind) {
        case PropertyKind::degenerate: return is_in_Dr(g, prop.r) ? Verdict::yes : Verdict::no;
        case PropertyKind::colorable: return chromatic_feasible(g, prop.r, prop.budget).verdict;
        case PropertyKind::choosable: return choosable(g, prop.r).choosable ? Verdict::yes : Verdict::no;
        case PropertyKind::no_regular: {
            const Verdict v = has_r_regular_subgraph(g, prop.r, prop.budget).verdict;
            return v == Verdict::undecided ? v : v == Verdict::yes ? Verdict::no : Verdict::yes;
        }
    }
    return Verdict::undecided;
}

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

inline constexpr double kZ95 = 1.959963984540054;

inline WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t n, double z = kZ95) {
    if (n == 0) return {};
    const double nn = static_cast<double>(n), ph = static_cast<double>(successes) / nn, z2 = z * z;
    const double d = 1.0 + z2 / nn;
    const double c = (ph + z2 / (2 * nn)) / d;
    const double h = z * std::sqrt(ph * (1 - ph) / nn + z2 / (4 * nn * nn)) / d;
    return {std::max(0.0, c - h), std::min(1.0, c + h)};
}

struct PercolationEstimate {
    double p = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t undecided = 0;
    double p_hat = 0.0;  // successes / decided trials
    double ci_lo = 0.0;
    double ci_hi = 1.0;
    std::uint64_t seed = 0;

    double undecided_fraction() const { return trials ? static_cast<double>(undecided) / trials : 0.0; }
};

// Trial i samples with seed + i; the event sees the kept-edge mask.
inline PercolationEstimate estimate_event(const Graph& g, double p, std::uint64_t trials, std::uint64_t seed,
                                          const std::function<Verdict(const std::vector<char>&)>& event,
                                          int workers = 1) {
    check_probability(p);
    if (trials == 0) throw std::invalid_argument("need at least one trial");
    workers = std::max(1, workers);
    std::vector<std::uint64_t> succ(workers, 0), und(workers, 0);
    std::vector<std::exception_ptr> err(workers);
    auto chunk = [&](int w) {
        try {
            const std::uint64_t a = trials * w / workers, b = trials * (w + 1) / workers;
            for (std::uint64_t i = a; i < b; ++i) {
                const Verdict v = event(sample_mask(g, p, seed + i));
                if (v == Verdict::yes) ++succ[w];
                else if (v == Verdict::undecided) ++und[w];
            }
        } catch (...) {
            err[w] = std::current_exception();
        }
    };
    if (workers == 1) chunk(0);
    else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(chunk, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : err)
        if (e) std::rethrow_exception(e);
    PercolationEstimate est;
    est.p = p;
    est.trials = trials;
    est.seed = seed;
    for (int w = 0; w < workers; ++w) {
        est.successes += succ[w];
        est.undecided += und[w];
    }
    const std::uint64_t decided = trials - est.undecided;
    est.p_hat = decided ? static_cast<double>(est.successes) / decided : 0.0;
    const auto ci = wilson_interval(est.successes, decided);
    est.ci_lo = ci.lo;
    est.ci_hi = ci.hi;
    return est;
}

namespace detail {

// Peeling on a kept-edge mask without building a graph.
class MaskPeeler {
public:
    explicit MaskPeeler(const Graph& g) : g_(g), incident_(g.order()) {
        for (int i = 0; i < g.size(); ++i) {
            incident_[g.edges()[i].u].push_back(i);
            incident_[g.edges()[i].v].push_back(i);
        }
    }

    bool degenerate(const std::vector<char>& kept, int r) const {
        const int n = g_.order();
        std::vector<int> deg(n, 0);
        for (int i = 0; i < g_.size(); ++i)
            if (kept[i]) {
                ++deg[g_.edges()[i].u];
                ++deg[g_.edges()[i].v];
            }
        std::vector<char> gone(n, 0);
        std::vector<Vertex> stack;
        int alive = n;
        for (Vertex v = 0; v < n; ++v)
            if (deg[v] < r) {
                gone[v] = 1;
                stack.push_back(v);
            }
        alive -= static_cast<int>(stack.size());
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (int e : incident_[v]) {
                if (!kept[e]) continue;
                const Vertex u = g_.edges()[e].u == v ? g_.edges()[e].v : g_.edges()[e].u;
                if (!gone[u] && --deg[u] < r) {
                    gone[u] = 1;
                    --alive;
                    stack.push_back(u);
                }
            }
        }
        return alive == 0;
    }

private:
    const Graph& g_;
    std::vector<std::vector<int>> incident_;
};

}  // namespace detail

inline PercolationEstimate estimate(const Graph& g, double p, const PropertySpec& prop, std::uint64_t trials,
                                    std::uint64_t seed, int workers = 1) {
    if (prop.kind == PropertyKind::degenerate) {
        const detail::MaskPeeler peeler(g);
        return estimate_event(
            g, p, trials, seed,
            [&](const std::vector<char>& kept) { return peeler.degenerate(kept, prop.r) ? Verdict::yes : Verdict::no; },
            workers);
    }
    return estimate_event(
        g, p, trials, seed,
        [&](const std::vector<char>& kept) {
            std::vector<Edge> e;
            for (int i = 0; i < g.size(); ++i)
                if (kept[i]) e.push_back(g.edges()[i]);
            return decide(prop, Graph(g.order(), std::move(e)));
        },
        workers);
}

inline constexpr double kMaxUndecidedFraction = 0.01;

struct UndecidedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonMonotoneError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ThresholdResult {
    double p_hat = 1.0;
    bool boundary = false;  // the property survives even at p = 1
    std::vector<PercolationEstimate> trace;
};

// Bisection for the p at which Pr(G_p in P) crosses 1/2. Every evaluation uses
// the same seed, so samples are coupled across p and, for the decreasing
// properties here, success counts must be non-increasing in p.
inline ThresholdResult empirical_threshold(const Graph& g, const PropertySpec& prop, std::uint64_t trials,
                                           std::uint64_t seed, double tol = 1e-4, int workers = 1) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    ThresholdResult out;
    auto eval = [&](double p) {
        const auto est = estimate(g, p, prop, trials, seed, workers);
        if (est.undecided_fraction() >= kMaxUndecidedFraction)
            throw UndecidedError("undecided fraction " + std::to_string(est.undecided_fraction()) + " at p=" +
                                 std::to_string(p));
        for (const auto& prev : out.trace)
            if ((prev.p < p && prev.successes < est.successes) || (prev.p > p && prev.successes > est.successes))
                throw NonMonotoneError("estimates not monotone in p near " + std::to_string(p));
        out.trace.push_back(est);
        return est.p_hat;
    };
    if (eval(1.0) >= 0.5) {
        out.p_hat = 1.0;
        out.boundary = true;
        return out;
    }
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (eval(mid) >= 0.5) lo = mid;
        else hi = mid;
    }
    out.p_hat = 0.5 * (lo + hi);
    return out;
}

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
};

// Least squares of log p against log n.
inline SlopeFit slope_fit(const std::vector<std::pair<double, double>>& rows) {
    if (rows.size() < 3) throw std::invalid_argument("slope_fit needs at least 3 rows");
    double sx = 0, sy = 0;
    for (const auto& [n, p] : rows) {
        if (!(n > 0) || !(p > 0)) throw std::invalid_argument("slope_fit needs positive n and p");
        sx += std::log(n);
        sy += std::log(p);
    }
    const double k = static_cast<double>(rows.size()), mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0;
    for (const auto& [n, p] : rows) {
        sxx += (std::log(n) - mx) * (std::log(n) - mx);
        sxy += (std::log(n) - mx) * (std::log(p) - my);
    }
    if (sxx <= 0) throw std::invalid_argument("slope_fit needs at least two distinct n");
    SlopeFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double sse = 0;
    for (const auto& [n, p] : rows) {
        const double r = std::log(p) - (f.intercept + f.slope * std::log(n));
        sse += r * r;
    }
    f.stderr_slope = std::sqrt(sse / (k - 2) / sxx);
    return f;
}

// Pr(at least k of the copies of Q in w survive), copies given by w.id_map.
inline PercolationEstimate containment_probability(const WedgeResult& w, const Graph& q, int k, double p,
                                                   std::uint64_t trials, std::uint64_t seed) {
    std::vector<std::vector<int>> copy_edges;
    for (const auto& m : w.id_map) {
        std::vector<int> idx;
        for (const auto& e : q.edges()) idx.push_back(static_cast<int>(*w.graph.edge_index(m[e.u], m[e.v])));
        copy_edges.push_back(idx);
    }
    return estimate_event(w.graph, p, trials, seed, [&](const std::vector<char>& kept) {
        int alive = 0;
        for (const auto& idx : copy_edges) {
            bool all = true;
            for (int i : idx) all = all && kept[i];
            alive += all;
        }
        return alive >= k ? Verdict::yes : Verdict::no;
    });
}

// Binomial tail Pr(Bin(ell, p^q) >= k).
inline double containment_exact(int ell, int q_edges, double p, int k) {
    const long double x = std::pow(static_cast<long double>(p), q_edges);
    if (k <= 0) return 1.0;
    if (x <= 0) return 0.0;
    if (x >= 1) return k <= ell ? 1.0 : 0.0;
    long double tail = 0;
    for (int j = k; j <= ell; ++j) {
        const long double lc = std::lgamma(static_cast<long double>(ell) + 1) - std::lgamma(static_cast<long double>(j) + 1) -
                               std::lgamma(static_cast<long double>(ell - j) + 1);
        tail += std::exp(lc + j * std::log(x) + (ell - j) * std::log1p(-x));
    }
    return static_cast<double>(tail);
}

struct SweepRow {
    std::string family;
    int n = 0;
    PercolationEstimate estimate;
};

inline std::string sweep_csv_header() { return "family,n,p,trials,successes,undecided,phat,ci_lo,ci_hi,seed\n"; }

inline std::string sweep_csv_row(const SweepRow& r) {
    char buf[512];
    const auto& e = r.estimate;
    std::snprintf(buf, sizeof buf, "%s,%d,%.10g,%llu,%llu,%llu,%.10g,%.10g,%.10g,%llu\n", r.family.c_str(), r.n, e.p,
                  static_cast<unsigned long long>(e.trials), static_cast<unsigned long long>(e.successes),
                  static_cast<unsigned long long>(e.undecided), e.p_hat, e.ci_lo, e.ci_hi,
                  static_cast<unsigned long long>(e.seed));
    return buf;
}

}  // namespace minorperc
