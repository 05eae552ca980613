// Brute-force enumerations used as ground truth on small graphs.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorperc/degeneracy.hpp"
#include "minorperc/graph.hpp"
#include "minorperc/minor.hpp"

namespace minorperc {

inline constexpr int kOracleMaxEdges = 20;

namespace detail {

// Does the edge set (given as a mask over g's edges) have a nonempty r-core?
inline bool mask_has_core(const Graph& g, const std::vector<char>& in, int r) {
    std::vector<int> deg(g.order(), 0);
    for (int i = 0; i < g.size(); ++i)
        if (in[i]) {
            ++deg[g.edges()[i].u];
            ++deg[g.edges()[i].v];
        }
    std::vector<char> dead(g.order(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < g.order(); ++v)
            if (!dead[v] && deg[v] < r) {
                dead[v] = 1;
                changed = true;
                for (int i = 0; i < g.size(); ++i)
                    if (in[i] && (g.edges()[i].u == v || g.edges()[i].v == v)) {
                        const Vertex u = g.edges()[i].u == v ? g.edges()[i].v : g.edges()[i].u;
                        if (!dead[u]) --deg[u];
                    }
            }
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (!dead[v]) return true;
    return false;
}

}  // namespace detail

// Every edge-minimal edge set whose spanned subgraph has minimum degree >= r.
inline std::vector<EdgeSet> enumerate_min_degree_subgraphs(const Graph& g, int r) {
    if (g.size() > kOracleMaxEdges) throw std::invalid_argument("oracle enumeration capped at 20 edges");
    if (r < 1) throw std::invalid_argument("r must be positive");
    const int m = g.size(), n = g.order();
    std::vector<int> deg(n, 0), rest(n, 0);
    for (Vertex v = 0; v < n; ++v) rest[v] = g.degree(v);
    std::vector<char> in(m, 0);
    std::vector<EdgeSet> out;
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            bool any = false;
            for (Vertex v = 0; v < n; ++v) {
                if (deg[v] > 0 && deg[v] < r) return;
                any |= deg[v] > 0;
            }
            if (!any) return;
            for (int e = 0; e < m; ++e) {
                if (!in[e]) continue;
                in[e] = 0;
                const bool smaller = detail::mask_has_core(g, in, r);
                in[e] = 1;
                if (smaller) return;
            }
            EdgeSet s;
            for (int e = 0; e < m; ++e)
                if (in[e]) s.push_back(g.edges()[e]);
            out.push_back(s);
            return;
        }
        const Vertex a = g.edges()[i].u, b = g.edges()[i].v;
        --rest[a];
        --rest[b];
        // Exclude edge i.
        if (!((deg[a] > 0 && deg[a] + rest[a] < r) || (deg[b] > 0 && deg[b] + rest[b] < r))) rec(i + 1);
        // Include edge i.
        ++deg[a];
        ++deg[b];
        in[i] = 1;
        if (deg[a] + rest[a] >= r && deg[b] + rest[b] >= r) rec(i + 1);
        in[i] = 0;
        --deg[a];
        --deg[b];
        ++rest[a];
        ++rest[b];
    };
    rec(0);
    return out;
}

struct ExtremalRow {
    int n = 0;
    int f = 0;  // max edges of an H-minor-free graph on n vertices
    int d = 0;  // max degeneracy of such a graph
    std::uint64_t graphs = 0;  // labeled H-minor-free graphs visited
};

inline constexpr int kExtremalMaxOrder = 7;

// Labeled enumeration; a graph containing H is never extended, since minors persist.
inline std::vector<ExtremalRow> extremal_table(const Graph& h, int n_max) {
    if (n_max < 1 || n_max > kExtremalMaxOrder) throw std::invalid_argument("extremal_table needs 1 <= n_max <= 7");
    std::vector<ExtremalRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Edge> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
        ExtremalRow row{n, 0, 0, 0};
        std::vector<Edge> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t next) {
            const Graph g(n, cur);
            ++row.graphs;
            row.f = std::max(row.f, g.size());
            row.d = std::max(row.d, degeneracy_order(g).degeneracy);
            for (std::size_t j = next; j < pairs.size(); ++j) {
                cur.push_back(pairs[j]);
                const Graph bigger(n, cur);
                const auto res = contains_minor(bigger, h, Budget::unlimited());
                if (res.verdict == Verdict::no) rec(j + 1);
                cur.pop_back();
            }
        };
        if (contains_minor(Graph(n), h, Budget::unlimited()).verdict == Verdict::no) rec(0);
        rows.push_back(row);
    }
    return rows;
}

struct ExtremalBoundsCheck {
    bool holds = true;
    std::vector<std::string> violations;
};

// f(n) <= d(n) n and d(n) <= 2 max_{m <= n} f(m)/m, row by row.
inline ExtremalBoundsCheck check_extremal_bounds(const std::vector<ExtremalRow>& rows) {
    ExtremalBoundsCheck out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (static_cast<long>(r.f) > static_cast<long>(r.d) * r.n) {
            out.holds = false;
            out.violations.push_back("n=" + std::to_string(r.n) + ": f > d*n");
        }
        bool ok = false;
        for (std::size_t j = 0; j <= i && !ok; ++j)
            ok = static_cast<long>(r.d) * rows[j].n <= 2L * rows[j].f;
        if (!ok) {
            out.holds = false;
            out.violations.push_back("n=" + std::to_string(r.n) + ": d > 2 max f(m)/m");
        }
    }
    return out;
}

}  // namespace minorperc
