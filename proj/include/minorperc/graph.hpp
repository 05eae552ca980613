// Simple undirected graphs on dense vertex ids 0..n-1, plus the combinators
// used to build every family in the library.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace minorperc {

using Vertex = int;
// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Sorted, duplicate-free edges.
using EdgeSet = std::vector<Edge>;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n_)) {}
    // Parallel edges are merged; self loops and out-of-range ids throw.
    Graph(int n, std::vector<Edge> edges) : Graph(n) {
        for (auto& e : edges) {
            if (e.u == e.v) throw std::invalid_argument("self loop at vertex " + std::to_string(e.u));
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            e = make_edge(e.u, e.v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        for (const auto& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const EdgeSet& edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        check(v);
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(Vertex a, Vertex b) const {
        if (a == b) return false;
        auto nb = neighbors(a);
        check(b);
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    // Position of edge {a,b} in edges(), the index used by percolation streams.
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
        const Edge e = make_edge(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }
    int max_degree() const {
        int d = 0;
        for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    static int checked_order(int n) {
        if (n < 0) throw std::invalid_argument("graph order must be non-negative");
        return n;
    }
    void check(Vertex v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    EdgeSet edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// An induced subgraph together with the ids it came from.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // new id -> parent id
};

inline VertexSet normalize(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, std::move(e));
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, std::move(e));
}

// Parts of sizes a and b; ids 0..a-1 then a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph(a + b, std::move(e));
}

inline Graph star_graph(int s) { return complete_bipartite(1, s); }

inline Graph petersen_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back(make_edge(i, (i + 1) % 5));
        e.push_back(make_edge(i, i + 5));
        e.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
    }
    return Graph(10, std::move(e));
}

// G's vertices keep their ids, H's are shifted by |V(G)|.
inline Graph join(const Graph& g, const Graph& h) {
    const int a = g.order();
    std::vector<Edge> e = g.edges();
    for (const auto& x : h.edges()) e.push_back({x.u + a, x.v + a});
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < h.order(); ++j) e.push_back({i, a + j});
    return Graph(a + h.order(), std::move(e));
}

struct UnionResult {
    Graph graph;
    std::vector<int> offsets;  // first id of each part
};

inline UnionResult disjoint_union(const std::vector<Graph>& parts) {
    UnionResult out;
    int n = 0;
    std::vector<Edge> e;
    for (const auto& p : parts) {
        out.offsets.push_back(n);
        for (const auto& x : p.edges()) e.push_back({x.u + n, x.v + n});
        n += p.order();
    }
    out.graph = Graph(n, std::move(e));
    return out;
}

inline Graph copies(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("copy count must be non-negative");
    return disjoint_union(std::vector<Graph>(static_cast<std::size_t>(t), g)).graph;
}

struct WedgeResult {
    Graph graph;
    // id_map[c][x]: id of vertex x of copy c. Vertices of Z map to the same id in every copy.
    std::vector<std::vector<Vertex>> id_map;
};

// k copies of G glued along Z. Copy 0 keeps G's ids; later copies append
// their non-Z vertices in increasing original id.
inline WedgeResult wedge(const Graph& g, const VertexSet& z_in, int k) {
    if (k < 1) throw std::invalid_argument("wedge needs at least one copy");
    const VertexSet z = normalize(z_in);
    std::vector<char> in_z(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : z) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("wedge vertex out of range");
        in_z[static_cast<std::size_t>(v)] = 1;
    }
    WedgeResult out;
    int n = g.order();
    for (int c = 0; c < k; ++c) {
        std::vector<Vertex> m(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) {
            if (c == 0 || in_z[static_cast<std::size_t>(v)]) m[static_cast<std::size_t>(v)] = v;
            else m[static_cast<std::size_t>(v)] = n++;
        }
        out.id_map.push_back(std::move(m));
    }
    std::vector<Edge> e;
    for (const auto& m : out.id_map)
        for (const auto& x : g.edges())
            e.push_back(make_edge(m[static_cast<std::size_t>(x.u)], m[static_cast<std::size_t>(x.v)]));
    out.graph = Graph(n, std::move(e));
    return out;
}

inline Graph pad_to(const Graph& g, int n) {
    if (n < g.order()) throw std::invalid_argument("pad_to target smaller than graph order");
    return Graph(n, g.edges());
}

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& keep_in) {
    const VertexSet keep = normalize(keep_in);
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.order()) throw std::out_of_range("vertex out of range");
        pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    std::vector<Edge> e;
    for (const auto& x : g.edges()) {
        const int a = pos[static_cast<std::size_t>(x.u)], b = pos[static_cast<std::size_t>(x.v)];
        if (a >= 0 && b >= 0) e.push_back({a, b});
    }
    return {Graph(static_cast<int>(keep.size()), std::move(e)), keep};
}

inline Subgraph remove_vertices(const Graph& g, const VertexSet& drop) {
    std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : drop) gone.at(static_cast<std::size_t>(v)) = 1;
    VertexSet keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

// Graph on the endpoints of es only, ids kept (isolated vertices stay).
inline Graph edge_subgraph(const Graph& g, const EdgeSet& es) { return Graph(g.order(), es); }

// Merges b into a; ids above b shift down by one.
inline Graph contract_edge(const Graph& g, Vertex a, Vertex b) {
    if (!g.adjacent(a, b)) throw std::invalid_argument("contract_edge: not an edge");
    auto rename = [&](Vertex x) {
        if (x == b) x = a;
        return x > b ? x - 1 : x;
    };
    std::vector<Edge> e;
    for (const auto& x : g.edges()) {
        const Vertex p = rename(x.u), q = rename(x.v);
        if (p != q) e.push_back(make_edge(p, q));
    }
    return Graph(g.order() - 1, std::move(e));
}

// Component label per vertex, labels assigned in order of least member.
inline std::vector<int> component_labels(const Graph& g, int* count = nullptr) {
    std::vector<int> lab(static_cast<std::size_t>(g.order()), -1);
    int c = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (lab[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<Vertex> stack{s};
        lab[static_cast<std::size_t>(s)] = c;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v))
                if (lab[static_cast<std::size_t>(u)] < 0) {
                    lab[static_cast<std::size_t>(u)] = c;
                    stack.push_back(u);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return lab;
}

inline std::vector<VertexSet> components(const Graph& g) {
    int c = 0;
    auto lab = component_labels(g, &c);
    std::vector<VertexSet> out(static_cast<std::size_t>(c));
    for (Vertex v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])].push_back(v);
    return out;
}

// BFS distances from src inside the vertices with allowed[v] != 0 (all if empty);
// -1 marks unreachable. Search stops past max_depth when max_depth >= 0.
inline std::vector<int> bfs_distances(const Graph& g, Vertex src, const std::vector<char>& allowed = {},
                                      int max_depth = -1) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    auto ok = [&](Vertex v) { return allowed.empty() || allowed[static_cast<std::size_t>(v)]; };
    if (!ok(src)) return dist;
    std::deque<Vertex> q{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop_front();
        const int dv = dist[static_cast<std::size_t>(v)];
        if (max_depth >= 0 && dv >= max_depth) continue;
        for (Vertex u : g.neighbors(v))
            if (ok(u) && dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dv + 1;
                q.push_back(u);
            }
    }
    return dist;
}

inline std::optional<int> distance(const Graph& g, Vertex a, Vertex b) {
    const int d = bfs_distances(g, a).at(static_cast<std::size_t>(b));
    if (d < 0) return std::nullopt;
    return d;
}

// Vertices of G[X] within distance ell of v. Empty for ell < 0.
inline VertexSet neighborhood_ball(const Graph& g, const VertexSet& x, Vertex v, int ell) {
    if (ell < 0) return {};
    std::vector<char> allowed(static_cast<std::size_t>(g.order()), 0);
    for (Vertex u : x) allowed.at(static_cast<std::size_t>(u)) = 1;
    if (!allowed.at(static_cast<std::size_t>(v))) throw std::invalid_argument("ball center outside X");
    const auto dist = bfs_distances(g, v, allowed, ell);
    VertexSet out;
    for (Vertex u = 0; u < g.order(); ++u)
        if (dist[static_cast<std::size_t>(u)] >= 0) out.push_back(u);
    return out;
}

// N_G(S): vertices outside S with a neighbour in S.
inline VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0), out(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s) in.at(static_cast<std::size_t>(v)) = 1;
    for (Vertex v : s)
        for (Vertex u : g.neighbors(v))
            if (!in[static_cast<std::size_t>(u)]) out[static_cast<std::size_t>(u)] = 1;
    VertexSet r;
    for (Vertex u = 0; u < g.order(); ++u)
        if (out[static_cast<std::size_t>(u)]) r.push_back(u);
    return r;
}

inline bool is_connected_set(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    std::vector<char> allowed(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s) allowed.at(static_cast<std::size_t>(v)) = 1;
    const auto dist = bfs_distances(g, s.front(), allowed);
    return std::all_of(s.begin(), s.end(), [&](Vertex v) { return dist[static_cast<std::size_t>(v)] >= 0; });
}

inline bool is_complete(const Graph& g) {
    return g.size() == g.order() * (g.order() - 1) / 2;
}

inline int count_isolated(const Graph& g) {
    int c = 0;
    for (Vertex v = 0; v < g.order(); ++v) c += g.degree(v) == 0;
    return c;
}

}  // namespace minorperc
