// Cores, degeneracy orderings and the greedy colouring they induce.
#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minorperc/graph.hpp"

namespace minorperc {

struct DegeneracyResult {
    int degeneracy = 0;
    // Vertices in removal order; each has at most `degeneracy` neighbours later in the list.
    std::vector<Vertex> order;
};

// Repeatedly removes a minimum-degree vertex, lowest id first.
inline DegeneracyResult degeneracy_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.insert({deg[v], v});
    }
    std::vector<char> gone(n, 0);
    DegeneracyResult out;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        out.degeneracy = std::max(out.degeneracy, d);
        out.order.push_back(v);
        gone[v] = 1;
        for (Vertex u : g.neighbors(v)) {
            if (gone[u]) continue;
            queue.erase({deg[u], u});
            queue.insert({--deg[u], u});
        }
    }
    return out;
}

// Maximal subgraph of minimum degree >= r; empty when none exists.
inline Subgraph core(const Graph& g, int r) {
    const int n = g.order();
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    std::vector<Vertex> stack;
    for (Vertex v = n - 1; v >= 0; --v) {
        deg[v] = g.degree(v);
        if (deg[v] < r) {
            gone[v] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (!gone[u] && --deg[u] < r) {
                gone[u] = 1;
                stack.push_back(u);
            }
    }
    VertexSet keep;
    for (Vertex v = 0; v < n; ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

// Every subgraph has a vertex of degree < r.
inline bool is_in_Dr(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("is_in_Dr needs r >= 1");
    return core(g, r).graph.order() == 0;
}

// Colours 0.. assigned along the reversed degeneracy order; uses at most degeneracy+1 colours.
inline std::vector<int> greedy_degeneracy_coloring(const Graph& g) {
    const auto ord = degeneracy_order(g).order;
    std::vector<int> color(g.order(), -1);
    for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
        std::vector<char> used(g.degree(*it) + 1, 0);
        for (Vertex u : g.neighbors(*it))
            if (color[u] >= 0 && color[u] < static_cast<int>(used.size())) used[color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[*it] = c;
    }
    return color;
}

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& color) {
    if (static_cast<int>(color.size()) != g.order()) return false;
    for (const auto& e : g.edges())
        if (color[e.u] == color[e.v]) return false;
    return true;
}

}  // namespace minorperc
