// Canonical forms for small vertex-coloured graphs (colour refinement, then
// brute force inside the refined cells).
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorperc/graph.hpp"

namespace minorperc {

inline std::vector<int> refine_colors(const Graph& g, std::vector<int> color) {
    const int n = g.order();
    int classes = -1;
    while (true) {
        std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            std::vector<int> nb;
            for (Vertex u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {s, v};
        }
        std::map<std::vector<int>, int> id;
        for (const auto& [s, v] : sig) id.emplace(s, 0);
        int next = 0;
        for (auto& [s, i] : id) i = next++;
        for (Vertex v = 0; v < n; ++v) color[v] = id[sig[v].first];
        if (next == classes) return color;
        classes = next;
    }
}

// Equal strings iff isomorphic by a colour-preserving map.
inline std::string canonical_form(const Graph& g, const std::vector<int>& colors) {
    const int n = g.order();
    if (static_cast<int>(colors.size()) != n) throw std::invalid_argument("one colour per vertex required");
    if (n > 14) throw std::invalid_argument("canonical_form is meant for small graphs");
    // Keep the user's colours significant: refine from (colour) only.
    const auto cls = refine_colors(g, colors);
    std::vector<std::vector<Vertex>> cells;
    {
        std::map<std::pair<int, int>, std::vector<Vertex>> byc;
        for (Vertex v = 0; v < n; ++v) byc[{cls[v], colors[v]}].push_back(v);
        for (auto& [k, vs] : byc) cells.push_back(vs);
    }
    std::string header;
    for (const auto& c : cells) header += std::to_string(colors[c.front()]) + ":" + std::to_string(c.size()) + ";";

    std::vector<Vertex> perm;  // position -> vertex
    std::string best;
    std::function<void(std::size_t)> rec = [&](std::size_t ci) {
        if (ci == cells.size()) {
            std::string bits;
            bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) bits.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
            if (best.empty() || bits < best) best = bits;
            return;
        }
        std::vector<Vertex> cell = cells[ci];
        std::sort(cell.begin(), cell.end());
        do {
            perm.insert(perm.end(), cell.begin(), cell.end());
            rec(ci + 1);
            perm.resize(perm.size() - cell.size());
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    rec(0);
    return header + best;
}

inline std::string canonical_form(const Graph& g) { return canonical_form(g, std::vector<int>(g.order(), 0)); }

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace minorperc
