// Graph families: joins with clique copies, the L_t gadgets, pedal graphs,
// list assignments without proper colourings, and the family spec grammar.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minorperc/canonical.hpp"
#include "minorperc/coloring.hpp"
#include "minorperc/common.hpp"
#include "minorperc/graph.hpp"
#include "minorperc/io.hpp"

namespace minorperc {

// I_{r-w} v tK_{w+1}: heart ids 0..r-w-1, copy c at r-w + c(w+1).
inline Graph gen_join_cliques(int r, int w, int t) {
    if (r < 1 || w < 0 || w > r || t < 1) throw std::invalid_argument("gen_join_cliques needs r >= 1, 0 <= w <= r, t >= 1");
    return join(empty_graph(r - w), copies(complete_graph(w + 1), t));
}

// L = (I_{r-1} v K_3) minus the matching x_k y_k (k = 0,1,2). Y = 0..r-2, X = r-1..r+1.
inline Graph gadget_L(int r) {
    if (r < 4) throw std::invalid_argument("the L gadget needs r >= 4");
    Graph base = join(empty_graph(r - 1), complete_graph(3));
    std::vector<Edge> e;
    for (const auto& x : base.edges()) {
        const bool matched = x.u < r - 1 && x.v >= r - 1 && x.v - (r - 1) == x.u;
        if (!matched) e.push_back(x);
    }
    return Graph(r + 2, std::move(e));
}

inline VertexSet gadget_L_heart(int r) {
    VertexSet y;
    for (int i = 0; i < r - 1; ++i) y.push_back(i);
    return y;
}

// L ^_t Y: (r-1) + 3t vertices, 3(r-1)t edges.
inline Graph gen_Lt(int r, int t) { return wedge(gadget_L(r), gadget_L_heart(r), t).graph; }

struct PedalGraph {
    Graph graph;  // heart ids 0..heart_size-1, F0 after that
    int heart_size = 0;
    int f0_size = 0;
    int type = 0;  // |E(F)|

    VertexSet heart() const {
        VertexSet h;
        for (int i = 0; i < heart_size; ++i) h.push_back(i);
        return h;
    }
};

// cross: (F0 vertex, heart vertex) pairs.
inline PedalGraph gen_pedal(int r_prime, const Graph& f0, int r, const std::vector<std::pair<int, int>>& cross) {
    if (r_prime < 0 || f0.order() == 0) throw std::invalid_argument("pedal needs a nonempty F0");
    if (!is_connected_set(f0, [&] {
            VertexSet all;
            for (Vertex v = 0; v < f0.order(); ++v) all.push_back(v);
            return all;
        }()))
        throw std::invalid_argument("pedal F0 must be connected");
    std::vector<Edge> e;
    for (const auto& x : f0.edges()) e.push_back({x.u + r_prime, x.v + r_prime});
    for (auto [a, h] : cross) {
        if (a < 0 || a >= f0.order() || h < 0 || h >= r_prime) throw std::invalid_argument("pedal cross edge out of range");
        e.push_back(make_edge(h, a + r_prime));
    }
    PedalGraph p{Graph(r_prime + f0.order(), std::move(e)), r_prime, f0.order(), 0};
    p.type = p.graph.size();
    for (Vertex v = r_prime; v < p.graph.order(); ++v)
        if (p.graph.degree(v) < r) throw std::invalid_argument("pedal F0 vertex below degree r");
    return p;
}

inline std::string pedal_key(const PedalGraph& p) {
    std::vector<int> col(p.graph.order(), 1);
    for (int i = 0; i < p.heart_size; ++i) col[i] = 0;
    return canonical_form(p.graph, col);
}

// All pedal graphs of the given type over I_{r'}, one per isomorphism class
// (isomorphisms fix the heart setwise), in a deterministic order.
inline std::vector<PedalGraph> enumerate_pedals(int r_prime, int r, int s) {
    if (r_prime < 0 || r < 1 || s < 0) throw std::invalid_argument("bad pedal parameters");
    std::map<std::string, PedalGraph> found;
    for (int m = 1; m - 1 <= s; ++m) {
        const int pairs = m * (m - 1) / 2;
        for (int e = std::max(m - 1, r * m - s); e <= std::min(pairs, s); ++e) {
            const int c = s - e;
            if (c > m * r_prime || c < 0) continue;
            std::vector<Edge> all;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) all.push_back({i, j});
            std::set<std::string> f0_seen;
            for_each_combination(pairs, e, [&](const std::vector<int>& pick) {
                std::vector<Edge> es;
                for (int i : pick) es.push_back(all[i]);
                Graph f0(m, es);
                VertexSet vs;
                for (Vertex v = 0; v < m; ++v) vs.push_back(v);
                if (!is_connected_set(f0, vs)) return true;
                std::vector<int> need(m);
                int need_total = 0;
                for (Vertex v = 0; v < m; ++v) {
                    need[v] = std::max(0, r - f0.degree(v));
                    if (need[v] > r_prime) return true;
                    need_total += need[v];
                }
                if (need_total > c) return true;
                if (!f0_seen.insert(canonical_form(f0)).second) return true;
                // Distribute c cross edges; vertex v takes a subset of the heart of size >= need[v].
                std::vector<std::pair<int, int>> cross;
                std::function<void(int, int)> rec = [&](int v, int left) {
                    if (v == m) {
                        if (left != 0) return;
                        PedalGraph p = gen_pedal(r_prime, f0, r, cross);
                        found.emplace(pedal_key(p), p);
                        return;
                    }
                    for (int k = need[v]; k <= std::min(r_prime, left); ++k)
                        for_each_combination(r_prime, k, [&](const std::vector<int>& hs) {
                            for (int h : hs) cross.push_back({v, h});
                            rec(v + 1, left - k);
                            cross.resize(cross.size() - hs.size());
                            return true;
                        });
                };
                rec(0, c);
                return true;
            });
        }
    }
    std::vector<PedalGraph> out;
    for (auto& [k, p] : found) out.push_back(std::move(p));
    return out;
}

struct ListInstance {
    Graph graph;
    ListAssignment lists;
};

// Digits of `index` in base r, most significant first.
inline std::vector<int> mixed_radix(std::int64_t index, int r, int digits) {
    std::vector<int> d(digits);
    for (int i = digits - 1; i >= 0; --i) {
        d[i] = static_cast<int>(index % r);
        index /= r;
    }
    return d;
}

inline std::int64_t int_pow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// I_{r-w} v r^{r-w} K_{w+1} with r-lists admitting no proper colouring.
// Heart vertex i (1-based) gets {ri..ri+r-1}; copy c gets {-1..-w} plus the
// c-th selection, one colour from each heart list.
inline ListInstance gen_bad_lists_join(int r, int w) {
    if (r < 1 || w < 0 || w > r) throw std::invalid_argument("gen_bad_lists_join needs 0 <= w <= r");
    const int heart = r - w;
    const std::int64_t t = int_pow(r, heart);
    if (t > 100000) throw std::invalid_argument("gen_bad_lists_join instance too large");
    ListInstance out{gen_join_cliques(r, w, static_cast<int>(t)), {}};
    for (int i = 1; i <= heart; ++i) {
        std::vector<int> l;
        for (int j = 0; j < r; ++j) l.push_back(r * i + j);
        out.lists.lists.push_back(l);
    }
    for (std::int64_t c = 0; c < t; ++c) {
        const auto d = mixed_radix(c, r, heart);
        std::vector<int> l;
        for (int j = 1; j <= w; ++j) l.push_back(-j);
        for (int i = 1; i <= heart; ++i) l.push_back(r * i + d[i - 1]);
        std::sort(l.begin(), l.end());
        for (int k = 0; k <= w; ++k) out.lists.lists.push_back(l);
    }
    return out;
}

// L_{r^{r-1}} with r-lists admitting no proper colouring. Heart y_i gets
// {ri..ri+r-1}; in copy c, x_k gets {-1,-2} plus the c-th selection minus
// its colour for y_{k+1}, the heart vertex x_k misses.
inline ListInstance gen_bad_lists_Lt(int r) {
    if (r < 4) throw std::invalid_argument("gen_bad_lists_Lt needs r >= 4");
    const int heart = r - 1;
    const std::int64_t t = int_pow(r, heart);
    if (t > 100000) throw std::invalid_argument("gen_bad_lists_Lt instance too large");
    const WedgeResult w = wedge(gadget_L(r), gadget_L_heart(r), static_cast<int>(t));
    ListInstance out{w.graph, {}};
    out.lists.lists.assign(w.graph.order(), {});
    for (int i = 1; i <= heart; ++i)
        for (int j = 0; j < r; ++j) out.lists.lists[i - 1].push_back(r * i + j);
    for (std::int64_t c = 0; c < t; ++c) {
        const auto d = mixed_radix(c, r, heart);
        for (int k = 0; k < 3; ++k) {
            std::vector<int> l{-2, -1};
            for (int i = 1; i <= heart; ++i)
                if (i != k + 1) l.push_back(r * i + d[i - 1]);
            std::sort(l.begin(), l.end());
            out.lists.lists[w.id_map[c][heart + k]] = l;
        }
    }
    return out;
}

struct FamilySpec {
    std::string name;
    std::map<std::string, int> params;
    std::string graph_name;  // for "graph:<name>"

    int param(const std::string& k) const {
        auto it = params.find(k);
        if (it == params.end()) throw std::invalid_argument("family " + name + " needs parameter " + k);
        return it->second;
    }
    bool has(const std::string& k) const { return params.count(k) > 0; }

    std::string str() const {
        if (name == "graph") return "graph:" + graph_name;
        std::string s = name + ":";
        bool first = true;
        for (const auto& [k, v] : params) {
            s += (first ? "" : ",") + k + "=" + std::to_string(v);
            first = false;
        }
        return s;
    }
};

inline Graph named_graph(const std::string& name);

// "joincliques:r=3,w=1,t=40", "lt:r=4,t=10", "kbip:r=3,s=100",
// "pedal:rp=1,r=2,s=3,index=0,t=5", "graph:K4".
inline FamilySpec parse_family(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("family spec needs name:params");
    FamilySpec f;
    f.name = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (f.name == "graph") {
        f.graph_name = rest;
        named_graph(rest);
        return f;
    }
    static const std::map<std::string, std::vector<std::string>> required{
        {"joincliques", {"r", "w"}}, {"lt", {"r"}}, {"kbip", {"r"}}, {"pedal", {"rp", "r", "s", "index"}}};
    static const std::map<std::string, std::set<std::string>> allowed{{"joincliques", {"r", "w", "t"}},
                                                                      {"lt", {"r", "t"}},
                                                                      {"kbip", {"r", "s"}},
                                                                      {"pedal", {"rp", "r", "s", "index", "t"}}};
    if (!required.count(f.name)) throw ParseError("unknown family '" + f.name + "'");
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        const std::string item = rest.substr(pos, comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) throw ParseError("bad family parameter '" + item + "'");
        const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (!allowed.at(f.name).count(key)) throw ParseError("family " + f.name + " has no parameter " + key);
        if (!std::all_of(val.begin(), val.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw ParseError("family parameter " + key + " must be a non-negative integer");
        f.params[key] = std::stoi(val);
        pos = comma + 1;
    }
    for (const auto& k : required.at(f.name))
        if (!f.has(k)) throw ParseError("family " + f.name + " needs parameter " + k);
    return f;
}

inline PedalGraph pedal_of(const FamilySpec& f) {
    const auto all = enumerate_pedals(f.param("rp"), f.param("r"), f.param("s"));
    const int i = f.param("index");
    if (i >= static_cast<int>(all.size())) throw std::invalid_argument("pedal index out of range");
    return all[i];
}

// The explicit member named by t (or s for kbip).
inline Graph family_graph(const FamilySpec& f) {
    if (f.name == "graph") return named_graph(f.graph_name);
    if (f.name == "joincliques") return gen_join_cliques(f.param("r"), f.param("w"), f.param("t"));
    if (f.name == "lt") return gen_Lt(f.param("r"), f.param("t"));
    if (f.name == "kbip") return complete_bipartite(f.param("r"), f.param("s"));
    const PedalGraph p = pedal_of(f);
    return wedge(p.graph, p.heart(), f.param("t")).graph;
}

// G_n: the largest member on at most n vertices, padded with isolated vertices.
inline Graph family_instance(const FamilySpec& f, int n) {
    auto need = [&](int t) {
        if (t < 1) throw std::invalid_argument("n too small for family " + f.str());
        return t;
    };
    Graph g;
    if (f.name == "graph") g = named_graph(f.graph_name);
    else if (f.name == "joincliques") {
        const int r = f.param("r"), w = f.param("w");
        g = gen_join_cliques(r, w, need((n - (r - w)) / (w + 1)));
    } else if (f.name == "lt") {
        const int r = f.param("r");
        g = gen_Lt(r, need((n - (r - 1)) / 3));
    } else if (f.name == "kbip") {
        const int r = f.param("r");
        g = complete_bipartite(r, need(n - r));
    } else {
        const PedalGraph p = pedal_of(f);
        g = wedge(p.graph, p.heart(), need((n - p.heart_size) / p.f0_size)).graph;
    }
    if (g.order() > n) throw std::invalid_argument("n too small for family " + f.str());
    return pad_to(g, n);
}

// "K5", "K3,3", "C4", "P4", "I3", "S3" (= K1,3), "petersen", "L4" (the L gadget), "Lt4,2".
inline Graph named_graph(const std::string& name) {
    auto num = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("unknown graph '" + name + "'");
        return std::stoi(s);
    };
    if (name == "petersen") return petersen_graph();
    if (name.empty()) throw ParseError("empty graph name");
    if (name.rfind("Lt", 0) == 0) {
        const auto comma = name.find(',');
        if (comma == std::string::npos) throw ParseError("Lt needs r,t");
        return gen_Lt(num(name.substr(2, comma - 2)), num(name.substr(comma + 1)));
    }
    const char k = name[0];
    const std::string rest = name.substr(1);
    if (k == 'K') {
        const auto comma = rest.find(',');
        if (comma == std::string::npos) return complete_graph(num(rest));
        return complete_bipartite(num(rest.substr(0, comma)), num(rest.substr(comma + 1)));
    }
    if (k == 'C') return cycle_graph(num(rest));
    if (k == 'P') return path_graph(num(rest));
    if (k == 'I') return empty_graph(num(rest));
    if (k == 'S') return star_graph(num(rest));
    if (k == 'L') return gadget_L(num(rest));
    throw ParseError("unknown graph '" + name + "'");
}

}  // namespace minorperc
