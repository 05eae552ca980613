// Maximum average degree (exact), clique counts and real-argument binomials.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

#include "minorperc/common.hpp"
#include "minorperc/degeneracy.hpp"
#include "minorperc/graph.hpp"

namespace minorperc {

namespace detail {

class Dinic {
public:
    explicit Dinic(int n) : adj_(n), level_(n), it_(n) {}

    void add_arc(int a, int b, std::int64_t cap) {
        adj_[a].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({b, cap});
        adj_[b].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({a, 0});
    }

    std::int64_t max_flow(int s, int t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            std::fill(it_.begin(), it_.end(), 0);
            while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += f;
        }
        return flow;
    }

    // Vertices reachable from s in the residual network.
    std::vector<char> source_side(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int a : adj_[v])
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = 1;
                    stack.push_back(arcs_[a].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        std::int64_t cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::deque<int> q{s};
        level_[s] = 0;
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (int a : adj_[v])
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[v] + 1;
                    q.push_back(arcs_[a].to);
                }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int v, int t, std::int64_t pushed) {
        if (v == t) return pushed;
        for (int& i = it_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            const int a = adj_[v][i];
            const int to = arcs_[a].to;
            if (arcs_[a].cap <= 0 || level_[to] != level_[v] + 1) continue;
            if (std::int64_t f = dfs(to, t, std::min(pushed, arcs_[a].cap))) {
                arcs_[a].cap -= f;
                arcs_[a ^ 1].cap += f;
                return f;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> it_;
};

}  // namespace detail

struct DensestSubgraph {
    Rational density;  // |E(S)| / |S|
    VertexSet vertices;
};

// Exact densest subgraph: Dinkelbach iteration over min-cut closures.
inline DensestSubgraph densest_subgraph(const Graph& g) {
    const int n = g.order(), m = g.size();
    DensestSubgraph best;
    if (n == 0) return best;
    best.density = Rational(m, n);
    for (Vertex v = 0; v < n; ++v) best.vertices.push_back(v);
    if (m == 0) return best;
    while (true) {
        const std::int64_t a = best.density.num(), b = best.density.den();
        const int src = m + n, snk = m + n + 1;
        detail::Dinic net(m + n + 2);
        const std::int64_t inf = b * m + 1;
        for (int i = 0; i < m; ++i) {
            net.add_arc(src, i, b);
            net.add_arc(i, m + g.edges()[i].u, inf);
            net.add_arc(i, m + g.edges()[i].v, inf);
        }
        for (Vertex v = 0; v < n; ++v) net.add_arc(m + v, snk, a);
        const std::int64_t cut = net.max_flow(src, snk);
        if (b * m - cut <= 0) return best;
        const auto side = net.source_side(src);
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
            if (side[m + v]) s.push_back(v);
        const Rational d(induced_subgraph(g, s).graph.size(), static_cast<std::int64_t>(s.size()));
        if (d <= best.density) return best;  // cannot happen with exact arithmetic
        best = {d, s};
    }
}

// max over subgraphs of 2|E|/|V|; 0 for graphs without edges.
inline Rational max_average_degree(const Graph& g) { return densest_subgraph(g).density * Rational(2); }

// Number of r-vertex cliques, enumerated along a degeneracy orientation.
inline std::uint64_t count_cliques(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("count_cliques needs r >= 1");
    if (r == 1) return static_cast<std::uint64_t>(g.order());
    if (r == 2) return static_cast<std::uint64_t>(g.size());
    const auto ord = degeneracy_order(g).order;
    std::vector<int> pos(g.order());
    for (int i = 0; i < g.order(); ++i) pos[ord[i]] = i;
    std::vector<std::vector<Vertex>> out(g.order());
    for (const auto& e : g.edges()) {
        if (pos[e.u] < pos[e.v]) out[e.u].push_back(e.v);
        else out[e.v].push_back(e.u);
    }
    for (auto& o : out) std::sort(o.begin(), o.end());
    std::uint64_t total = 0;
    std::function<void(const std::vector<Vertex>&, int)> rec = [&](const std::vector<Vertex>& cand, int need) {
        if (need == 0) {
            ++total;
            return;
        }
        if (static_cast<int>(cand.size()) < need) return;
        for (Vertex v : cand) {
            std::vector<Vertex> next;
            std::set_intersection(cand.begin(), cand.end(), out[v].begin(), out[v].end(), std::back_inserter(next));
            rec(next, need - 1);
        }
    };
    for (Vertex v = 0; v < g.order(); ++v) rec(out[v], r - 1);
    return total;
}

// x(x-1)...(x-k+1)/k! for x >= k-1, and 0 below that range.
inline Rational generalized_binomial(const Rational& x, int k) {
    if (k < 0) throw std::invalid_argument("generalized_binomial needs k >= 0");
    if (x < Rational(k - 1)) return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * (x - Rational(i)) / Rational(i + 1);
    return r;
}

}  // namespace minorperc
