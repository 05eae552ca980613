// Vertex covers and "cover shape" tests: H is a subgraph of K_a v tK_b.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minorperc/common.hpp"
#include "minorperc/graph.hpp"

namespace minorperc {

struct CoverResult {
    int tau = 0;
    VertexSet cover;  // a minimum vertex cover
};

// Branch and bound on a maximum-degree vertex: take it, or take its neighbourhood.
inline CoverResult tau(const Graph& h) {
    const int n = h.order();
    std::vector<char> removed(n, 0);
    std::vector<Vertex> current;
    CoverResult best{n, {}};
    for (Vertex v = 0; v < n; ++v) best.cover.push_back(v);

    auto live_degree = [&](Vertex v) {
        int d = 0;
        for (Vertex u : h.neighbors(v)) d += !removed[u];
        return d;
    };
    auto matching_bound = [&]() {
        std::vector<char> hit(n, 0);
        int m = 0;
        for (const auto& e : h.edges())
            if (!removed[e.u] && !removed[e.v] && !hit[e.u] && !hit[e.v]) {
                hit[e.u] = hit[e.v] = 1;
                ++m;
            }
        return m;
    };

    std::function<void()> rec = [&]() {
        if (static_cast<int>(current.size()) + matching_bound() >= best.tau) return;
        Vertex pick = -1;
        int pick_deg = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (removed[v]) continue;
            const int d = live_degree(v);
            if (d == 1) {
                // A leaf's neighbour is always a safe choice.
                for (Vertex u : h.neighbors(v))
                    if (!removed[u]) pick = u;
                pick_deg = -1;
                break;
            }
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        if (pick < 0) {
            best.tau = static_cast<int>(current.size());
            best.cover = normalize(current);
            return;
        }
        removed[pick] = 1;
        current.push_back(pick);
        rec();
        current.pop_back();
        removed[pick] = 0;
        if (pick_deg < 0) return;
        std::vector<Vertex> nb;
        for (Vertex u : h.neighbors(pick))
            if (!removed[u]) nb.push_back(u);
        for (Vertex u : nb) {
            removed[u] = 1;
            current.push_back(u);
        }
        removed[pick] = 1;  // isolated after its neighbours go
        rec();
        removed[pick] = 0;
        for (Vertex u : nb) {
            removed[u] = 0;
            current.pop_back();
        }
    };
    rec();
    return best;
}

// Sizes of the components of H - S.
inline std::vector<int> component_sizes_without(const Graph& h, const VertexSet& s) {
    const Subgraph rest = remove_vertices(h, s);
    std::vector<int> sizes;
    for (const auto& c : components(rest.graph)) sizes.push_back(static_cast<int>(c.size()));
    return sizes;
}

// Least-lexicographic S, |S| <= a, with every component of H - S on at most b vertices.
inline std::optional<VertexSet> subgraph_of_cover_shape(const Graph& h, int a, int b) {
    if (a < 0 || b < 0) return std::nullopt;
    for (int size = 0; size <= std::min(a, h.order()); ++size) {
        std::optional<VertexSet> found;
        for_each_combination(h.order(), size, [&](const std::vector<int>& s) {
            const auto sizes = component_sizes_without(h, s);
            if (std::all_of(sizes.begin(), sizes.end(), [&](int c) { return c <= b; })) {
                found = VertexSet(s.begin(), s.end());
                return false;
            }
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

// Fewest bins of capacity b holding all sizes (each <= b).
inline int bin_pack(std::vector<int> sizes, int b) {
    if (sizes.empty()) return 0;
    std::sort(sizes.rbegin(), sizes.rend());
    int total = 0;
    for (int s : sizes) total += s;
    const int lower = (total + b - 1) / b;
    std::vector<int> bins;
    for (int s : sizes) {
        auto it = std::find_if(bins.begin(), bins.end(), [&](int load) { return load + s <= b; });
        if (it == bins.end()) bins.push_back(s);
        else *it += s;
    }
    int best = static_cast<int>(bins.size());
    if (best == lower) return best;
    std::vector<int> load;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (static_cast<int>(load.size()) >= best) return;
        if (i == sizes.size()) {
            best = static_cast<int>(load.size());
            return;
        }
        std::vector<int> tried;
        for (std::size_t j = 0; j < load.size(); ++j) {
            if (load[j] + sizes[i] > b || std::find(tried.begin(), tried.end(), load[j]) != tried.end()) continue;
            tried.push_back(load[j]);
            load[j] += sizes[i];
            rec(i + 1);
            load[j] -= sizes[i];
            if (best == lower) return;
        }
        load.push_back(sizes[i]);
        rec(i + 1);
        load.pop_back();
    };
    rec(0);
    return best;
}

// Least t >= 1 with H a subgraph of K_a v tK_b, if any t works.
inline std::optional<int> min_t_subgraph(const Graph& h, int a, int b) {
    if (a < 0 || b < 1) return std::nullopt;
    std::optional<int> best;
    for (int size = 0; size <= std::min(a, h.order()); ++size)
        for_each_combination(h.order(), size, [&](const std::vector<int>& s) {
            const auto sizes = component_sizes_without(h, s);
            if (std::all_of(sizes.begin(), sizes.end(), [&](int c) { return c <= b; })) {
                const int t = std::max(1, bin_pack(sizes, b));
                if (!best || t < *best) best = t;
            }
            return true;
        });
    return best;
}

inline bool in_Hr(const Graph& h, int r) {
    if (r < 2) throw std::invalid_argument("in_Hr needs r >= 2");
    const int t = tau(h).tau;
    return t >= 1 && t <= r && subgraph_of_cover_shape(h, t - 1, r + 2 - t).has_value();
}

}  // namespace minorperc
