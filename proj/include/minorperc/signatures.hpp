// Spans, island partitions and signature collections: families of edge sets
// such that every subgraph of minimum degree >= r contains one of them.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minorperc/common.hpp"
#include "minorperc/constructions.hpp"
#include "minorperc/degeneracy.hpp"
#include "minorperc/graph.hpp"
#include "minorperc/io.hpp"
#include "minorperc/oracle.hpp"
#include "minorperc/percolation.hpp"

namespace minorperc {

// V(H) misses Y and |N_G(V(H)) ∩ Y| >= r.
inline bool is_r_adherent(const Graph& g, const VertexSet& y, const VertexSet& h, int r) {
    std::vector<char> in_y(g.order(), 0);
    for (Vertex v : y) in_y.at(v) = 1;
    for (Vertex v : h)
        if (in_y.at(v)) return false;
    int count = 0;
    for (Vertex u : open_neighborhood(g, h)) count += in_y[u];
    return count >= r;
}

struct Span {
    Vertex root = 0;
    VertexSet vertices;
    std::vector<std::vector<Vertex>> paths;  // root-to-leaf paths of a BFS tree of the span
};

namespace detail {

struct SpanContext {
    const Graph& g;
    std::vector<char> in_y;     // adherence counts these
    std::vector<char> blocked;  // span may not use these (Y and anything taken)
};

inline int y_degree_of(const SpanContext& c, const std::vector<char>& member) {
    std::vector<char> hit(c.g.order(), 0);
    int count = 0;
    for (Vertex v = 0; v < c.g.order(); ++v)
        if (member[v])
            for (Vertex u : c.g.neighbors(v))
                if (c.in_y[u] && !member[u] && !hit[u]) {
                    hit[u] = 1;
                    ++count;
                }
    return count;
}

inline bool span_ok(const SpanContext& c, Vertex v, const std::vector<char>& member, int k, int r) {
    const auto d = bfs_distances(c.g, v, member, k);
    for (Vertex u = 0; u < c.g.order(); ++u)
        if (member[u] && d[u] < 0) return false;
    return y_degree_of(c, member) >= r;
}

// Greedy union of at most r shortest root paths, then single-vertex pruning
// (farthest first), which leaves an inclusion-minimal span.
inline std::optional<Span> minimal_span(const SpanContext& c, Vertex v, int k, int r) {
    const Graph& g = c.g;
    if (c.blocked[v]) return std::nullopt;
    std::vector<char> allowed(g.order());
    for (Vertex u = 0; u < g.order(); ++u) allowed[u] = !c.blocked[u];
    const auto dist = bfs_distances(g, v, allowed, k);
    std::vector<Vertex> parent(g.order(), -1);
    for (Vertex u = 0; u < g.order(); ++u) {
        if (dist[u] <= 0) continue;
        for (Vertex w : g.neighbors(u))
            if (dist[w] == dist[u] - 1) {
                parent[u] = w;
                break;
            }
    }
    std::vector<char> ball(g.order(), 0);
    for (Vertex u = 0; u < g.order(); ++u) ball[u] = dist[u] >= 0;
    if (y_degree_of(c, ball) < r) return std::nullopt;

    std::vector<Vertex> by_dist;
    for (Vertex u = 0; u < g.order(); ++u)
        if (dist[u] >= 0) by_dist.push_back(u);
    std::stable_sort(by_dist.begin(), by_dist.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });

    std::vector<char> member(g.order(), 0), covered(g.order(), 0);
    int ncovered = 0;
    auto cover_from = [&](Vertex u) {
        for (Vertex w : g.neighbors(u))
            if (c.in_y[w] && !covered[w]) {
                covered[w] = 1;
                ++ncovered;
            }
    };
    member[v] = 1;
    cover_from(v);
    while (ncovered < r) {
        Vertex pick = -1;
        for (Vertex u : by_dist) {
            for (Vertex w : g.neighbors(u))
                if (c.in_y[w] && !covered[w]) {
                    pick = u;
                    break;
                }
            if (pick >= 0) break;
        }
        if (pick < 0) return std::nullopt;  // unreachable: the ball has enough
        for (Vertex u = pick; u >= 0 && !member[u]; u = parent[u]) {
            member[u] = 1;
            cover_from(u);
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        const auto d = bfs_distances(g, v, member);
        std::vector<Vertex> order;
        for (Vertex u = 0; u < g.order(); ++u)
            if (member[u] && u != v) order.push_back(u);
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return d[a] != d[b] ? d[a] > d[b] : a > b; });
        for (Vertex u : order) {
            member[u] = 0;
            if (span_ok(c, v, member, k, r)) {
                changed = true;
                break;
            }
            member[u] = 1;
        }
    }
    Span s{v, {}, {}};
    for (Vertex u = 0; u < g.order(); ++u)
        if (member[u]) s.vertices.push_back(u);
    const auto d = bfs_distances(g, v, member);
    std::vector<Vertex> up(g.order(), -1);
    std::vector<char> inner(g.order(), 0);
    for (Vertex u : s.vertices) {
        if (u == v) continue;
        for (Vertex w : g.neighbors(u))
            if (member[w] && d[w] == d[u] - 1) {
                up[u] = w;
                inner[w] = 1;
                break;
            }
    }
    for (Vertex u : s.vertices) {
        if (inner[u]) continue;
        std::vector<Vertex> path;
        for (Vertex x = u; x >= 0; x = up[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        s.paths.push_back(path);
    }
    return s;
}

}  // namespace detail

// A minimal (v, Y, k, r)-span: connected in G - Y, radius <= k around v,
// r-adherent to Y, and no vertex can be dropped.
inline std::optional<Span> minimal_span(const Graph& g, const VertexSet& y, Vertex v, int k, int r) {
    if (k < 0 || r < 0) throw std::invalid_argument("minimal_span needs k, r >= 0");
    detail::SpanContext c{g, std::vector<char>(g.order(), 0), std::vector<char>(g.order(), 0)};
    for (Vertex u : y) c.in_y.at(u) = c.blocked.at(u) = 1;
    if (c.in_y.at(v)) throw std::invalid_argument("span root lies in Y");
    return detail::minimal_span(c, v, k, r);
}

struct IslandRound {
    int x_size = 0;
    int spans = 0;
    int d_size = 0;
    int z_size = 0;
};

struct IslandResult {
    bool success = false;
    VertexSet x;  // the island set on success
    VertexSet z;
    int rounds = 0;
    std::vector<IslandRound> trace;
};

inline int island_round_limit(int r, int ell) {
    return static_cast<int>(int_pow(r + 1, ell)) + 1;
}

// Iterative peeling of X_0 = {deg <= d}: each round removes a maximal family
// of disjoint minimal spans and a maximal spread-out set Z_i, until
// |Z_i| > beta |V - X_i| or the round limit (r+1)^ell + 1 is reached.
inline IslandResult island_partition(const Graph& g, int r, int ell, int d, const Rational& beta) {
    if (r < 1 || ell < 0 || d < 0 || beta < Rational(0)) throw std::invalid_argument("bad island parameters");
    const int n = g.order();
    IslandResult out;
    std::vector<char> in_x(n, 0);
    for (Vertex v = 0; v < n; ++v) in_x[v] = g.degree(v) <= d;
    const int limit = island_round_limit(r, ell);
    for (int round = 0; round < limit; ++round) {
        VertexSet x;
        for (Vertex v = 0; v < n; ++v)
            if (in_x[v]) x.push_back(v);
        IslandRound info;
        info.x_size = static_cast<int>(x.size());

        detail::SpanContext ctx{g, std::vector<char>(n, 0), std::vector<char>(n, 0)};
        for (Vertex v = 0; v < n; ++v) ctx.in_y[v] = ctx.blocked[v] = !in_x[v];
        std::vector<char> in_d(n, 0);
        for (Vertex v : x) {
            if (in_d[v]) continue;
            if (ell >= 1) {
                // The (ell-1)-ball in G - Y must already see r vertices of Y.
                std::vector<char> allowed(n);
                for (Vertex u = 0; u < n; ++u) allowed[u] = in_x[u];
                const auto dist = bfs_distances(g, v, allowed, ell - 1);
                std::vector<char> ball(n);
                for (Vertex u = 0; u < n; ++u) ball[u] = dist[u] >= 0;
                if (detail::y_degree_of(ctx, ball) < r) continue;
            }
            auto s = detail::minimal_span(ctx, v, ell, r);
            if (!s) continue;
            ++info.spans;
            for (Vertex u : s->vertices) in_d[u] = ctx.blocked[u] = 1;
        }
        VertexSet dset;
        for (Vertex v = 0; v < n; ++v)
            if (in_d[v]) dset.push_back(v);
        info.d_size = static_cast<int>(dset.size());
        std::vector<char> near_d(n, 0);
        for (Vertex u : open_neighborhood(g, dset)) near_d[u] = 1;

        std::vector<char> x_allowed(n), xd_allowed(n), too_close(n, 0);
        for (Vertex u = 0; u < n; ++u) {
            x_allowed[u] = in_x[u];
            xd_allowed[u] = in_x[u] && !in_d[u];
        }
        VertexSet z;
        for (Vertex v : x) {
            if (in_d[v] || too_close[v]) continue;
            if (ell >= 1) {
                const auto ball = bfs_distances(g, v, xd_allowed, ell - 1);
                bool clear = true;
                for (Vertex u = 0; u < n && clear; ++u)
                    if (ball[u] >= 0 && near_d[u]) clear = false;
                if (!clear) continue;
            }
            z.push_back(v);
            const auto near = bfs_distances(g, v, x_allowed, ell);
            for (Vertex u = 0; u < n; ++u)
                if (near[u] >= 0) too_close[u] = 1;
        }
        info.z_size = static_cast<int>(z.size());
        out.trace.push_back(info);
        out.rounds = round + 1;
        const std::int64_t outside = n - static_cast<std::int64_t>(x.size());
        if (Rational(static_cast<std::int64_t>(z.size())) > beta * Rational(outside)) {
            out.success = true;
            out.x = x;
            out.z = z;
            return out;
        }
        for (Vertex v : z) in_x[v] = 0;
        for (Vertex v : dset) in_x[v] = 0;
        if (std::none_of(in_x.begin(), in_x.end(), [](char c) { return c != 0; })) break;
    }
    return out;
}

// The degree bound d of the island construction, for inspection only.
inline long double island_degree_bound(int r, int t, int ell, long double k, long double k_prime, long double beta) {
    long double binom = 1;
    for (int i = 0; i < r - 1; ++i) binom = binom * (k_prime - i) / (i + 1);
    const long double alpha = (t - 1) * binom + k_prime / 2;
    const long double gamma = beta + (ell * r + 1) * alpha;
    return (1 + std::pow(1 + gamma, static_cast<long double>(int_pow(r + 1, ell)))) * k;
}

struct SignatureCollection {
    int q = 0;
    std::vector<EdgeSet> members;
    std::optional<Rational> c_bound;  // |members| <= c_bound * |V|
};

inline nlohmann::json to_json(const SignatureCollection& c) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : c.members) {
        nlohmann::json es = nlohmann::json::array();
        for (const auto& e : m) es.push_back({e.u, e.v});
        members.push_back(es);
    }
    nlohmann::json j{{"q", c.q}, {"members", members}};
    j["c_bound"] = c.c_bound ? nlohmann::json(c.c_bound->str()) : nlohmann::json(nullptr);
    return j;
}

inline SignatureCollection collection_from_json(const nlohmann::json& j) {
    try {
        SignatureCollection c;
        c.q = j.at("q").get<int>();
        for (const auto& m : j.at("members")) {
            EdgeSet es;
            for (const auto& e : m) es.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
            const std::set<Edge> uniq(es.begin(), es.end());
            c.members.emplace_back(uniq.begin(), uniq.end());
        }
        if (j.contains("c_bound") && !j["c_bound"].is_null()) c.c_bound = Rational::parse(j["c_bound"].get<std::string>());
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("collection json: ") + e.what());
    }
}

struct PickerChoice {
    VertexSet z;
    Vertex z_star = -1;
};

// Chooses (Z, z*) for the current graph G[alive]. The promise: every subgraph
// of minimum degree >= r through z* meets Z in at least t vertices.
struct Picker {
    int zeta = 1;
    int a = 0;
    int t = 1;
    std::function<PickerChoice(const Graph&, const std::vector<char>&)> choose;
};

struct PickerContractError : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {

inline std::vector<int> live_degrees(const Graph& g, const std::vector<char>& alive) {
    std::vector<int> deg(g.order(), 0);
    for (const auto& e : g.edges())
        if (alive[e.u] && alive[e.v]) {
            ++deg[e.u];
            ++deg[e.v];
        }
    return deg;
}

inline Vertex lowest_min_degree(const Graph& g, const std::vector<char>& alive) {
    const auto deg = live_degrees(g, alive);
    Vertex best = -1;
    for (Vertex v = 0; v < g.order(); ++v)
        if (alive[v] && (best < 0 || deg[v] < deg[best])) best = v;
    return best;
}

inline std::vector<Edge> live_star(const Graph& g, const std::vector<char>& alive, Vertex v) {
    std::vector<Edge> es;
    for (Vertex u : g.neighbors(v))
        if (alive[u]) es.push_back(make_edge(v, u));
    return es;
}

}  // namespace detail

// Repeatedly takes the lowest-id minimum-degree vertex, adds every r-subset of
// its live edges, and deletes it.
inline SignatureCollection build_weak_collection(const Graph& g, int r, int degree_bound) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    SignatureCollection c;
    c.q = r;
    c.c_bound = Rational(binomial(degree_bound, r));
    std::vector<char> alive(g.order(), 1);
    for (int step = 0; step < g.order(); ++step) {
        const Vertex z = detail::lowest_min_degree(g, alive);
        const auto star = detail::live_star(g, alive, z);
        if (static_cast<int>(star.size()) > degree_bound)
            throw std::invalid_argument("minimum degree " + std::to_string(star.size()) + " exceeds the degree bound");
        for_each_combination(static_cast<int>(star.size()), r, [&](const std::vector<int>& pick) {
            EdgeSet m;
            for (int i : pick) m.push_back(star[i]);
            std::sort(m.begin(), m.end());
            c.members.push_back(m);
            return true;
        });
        alive[z] = 0;
    }
    return c;
}

inline Picker weak_picker(int degree_bound) {
    Picker p;
    p.zeta = 1;
    p.a = degree_bound;
    p.t = 1;
    p.choose = [](const Graph& g, const std::vector<char>& alive) {
        const Vertex z = detail::lowest_min_degree(g, alive);
        return PickerChoice{{z}, z};
    };
    return p;
}

// Members: for each t-subset T of Z and each choice of r live edges at every
// vertex of T, the union, cut to its q = rt - C(t,2) smallest edges.
inline SignatureCollection build_sufficient_collection(const Graph& g, int r, const Picker& picker) {
    if (r < 1 || picker.t < 1 || picker.zeta < picker.t) throw std::invalid_argument("bad picker parameters");
    SignatureCollection c;
    c.q = r * picker.t - static_cast<int>(binomial(picker.t, 2));
    c.c_bound = Rational(binomial(picker.zeta, picker.t)) * Rational(int_pow(binomial(picker.a, r), picker.t));
    std::vector<char> alive(g.order(), 1);
    std::set<EdgeSet> seen;
    const auto deg_count = [&] { return std::count(alive.begin(), alive.end(), 1); };
    while (deg_count() > 0) {
        const PickerChoice ch = picker.choose(g, alive);
        const VertexSet z = normalize(ch.z);
        if (static_cast<int>(z.size()) > picker.zeta) throw PickerContractError("picker returned more than zeta vertices");
        if (!std::binary_search(z.begin(), z.end(), ch.z_star)) throw PickerContractError("z* not in Z");
        const auto deg = detail::live_degrees(g, alive);
        for (Vertex v : z) {
            if (v < 0 || v >= g.order() || !alive[v]) throw PickerContractError("picker returned a deleted vertex");
            if (deg[v] > picker.a) throw PickerContractError("picker vertex above degree a");
        }
        for_each_combination(static_cast<int>(z.size()), picker.t, [&](const std::vector<int>& tpick) {
            std::vector<std::vector<Edge>> stars;
            for (int i : tpick) stars.push_back(detail::live_star(g, alive, z[i]));
            std::vector<std::vector<int>> choice(stars.size());
            std::function<void(std::size_t, std::vector<Edge>&)> rec = [&](std::size_t i, std::vector<Edge>& acc) {
                if (i == stars.size()) {
                    std::set<Edge> u(acc.begin(), acc.end());
                    EdgeSet m(u.begin(), u.end());
                    if (static_cast<int>(m.size()) < c.q) throw std::logic_error("star union below q");
                    m.resize(c.q);
                    if (seen.insert(m).second) c.members.push_back(m);
                    return;
                }
                for_each_combination(static_cast<int>(stars[i].size()), r, [&](const std::vector<int>& pick) {
                    for (int j : pick) acc.push_back(stars[i][j]);
                    rec(i + 1, acc);
                    acc.resize(acc.size() - pick.size());
                    return true;
                });
            };
            std::vector<Edge> acc;
            rec(0, acc);
            return true;
        });
        alive[ch.z_star] = 0;
    }
    return c;
}

struct VerifyReport {
    bool covers = false;
    bool exhaustive = false;
    std::optional<EdgeSet> counterexample;  // min-degree >= r edge set containing no member
    std::uint64_t checked = 0;
};

inline bool contains_member(const SignatureCollection& c, const EdgeSet& r_edges) {
    for (const auto& m : c.members)
        if (std::includes(r_edges.begin(), r_edges.end(), m.begin(), m.end())) return true;
    return false;
}

inline void check_collection_shape(const Graph& g, const SignatureCollection& c) {
    for (const auto& m : c.members) {
        if (static_cast<int>(m.size()) != c.q) throw std::invalid_argument("collection member of the wrong size");
        for (const auto& e : m)
            if (!g.edge_index(e.u, e.v)) throw std::invalid_argument("collection member uses a non-edge");
    }
}

// Exhaustive over edge-minimal subgraphs of minimum degree >= r (|E| <= 20).
inline VerifyReport verify_collection(const Graph& g, const SignatureCollection& c, int r) {
    check_collection_shape(g, c);
    VerifyReport rep;
    rep.exhaustive = true;
    rep.covers = true;
    for (const auto& s : enumerate_min_degree_subgraphs(g, r)) {
        ++rep.checked;
        if (!contains_member(c, s)) {
            rep.covers = false;
            rep.counterexample = s;
            break;
        }
    }
    return rep;
}

// Non-exhaustive probe for larger graphs: r-cores of random half-samples.
inline VerifyReport verify_collection_sampled(const Graph& g, const SignatureCollection& c, int r, int samples,
                                              std::uint64_t seed) {
    check_collection_shape(g, c);
    VerifyReport rep;
    rep.covers = true;
    for (int i = 0; i < samples; ++i) {
        const Graph s = i == 0 ? g : sample_subgraph(g, 0.5, seed + static_cast<std::uint64_t>(i));
        const Subgraph k = core(s, r);
        if (k.graph.order() == 0) continue;
        ++rep.checked;
        EdgeSet es;
        for (const auto& e : k.graph.edges()) es.push_back(make_edge(k.to_parent[e.u], k.to_parent[e.v]));
        std::sort(es.begin(), es.end());
        if (!contains_member(c, es)) {
            rep.covers = false;
            rep.counterexample = es;
            break;
        }
    }
    return rep;
}

struct UnionBoundReport {
    PercolationEstimate estimate;  // Pr(some member survives)
    double bound = 0;              // |C| p^q
    double sigma = 0;
    bool holds = false;            // p_hat <= bound + 3 sigma
};

inline UnionBoundReport union_bound_check(const Graph& g, const SignatureCollection& c, double p, std::uint64_t trials,
                                          std::uint64_t seed) {
    check_collection_shape(g, c);
    std::vector<std::vector<int>> idx;
    for (const auto& m : c.members) {
        std::vector<int> v;
        for (const auto& e : m) v.push_back(static_cast<int>(*g.edge_index(e.u, e.v)));
        idx.push_back(v);
    }
    UnionBoundReport rep;
    rep.estimate = estimate_event(g, p, trials, seed, [&](const std::vector<char>& kept) {
        for (const auto& m : idx) {
            bool all = true;
            for (int i : m) all = all && kept[i];
            if (all) return Verdict::yes;
        }
        return Verdict::no;
    });
    rep.bound = static_cast<double>(c.members.size()) * std::pow(p, c.q);
    const double ph = rep.estimate.p_hat;
    rep.sigma = std::sqrt(ph * (1 - ph) / static_cast<double>(trials));
    rep.holds = ph <= rep.bound + 3 * rep.sigma;
    return rep;
}

}  // namespace minorperc
