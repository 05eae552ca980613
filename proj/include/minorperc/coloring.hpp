// Exact (list) colouring by backtracking with forward checking and unit propagation.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minorperc/common.hpp"
#include "minorperc/graph.hpp"

namespace minorperc {

struct ListAssignment {
    std::vector<std::vector<int>> lists;  // lists[v], sorted and duplicate free

    static ListAssignment uniform(int n, int r) {
        ListAssignment l;
        std::vector<int> base(r);
        for (int i = 0; i < r; ++i) base[i] = i;
        l.lists.assign(n, base);
        return l;
    }
    bool operator==(const ListAssignment&) const = default;
};

struct ColoringResult {
    Verdict verdict = Verdict::undecided;
    std::vector<int> coloring;  // filled when verdict == yes
    std::uint64_t nodes = 0;
};

namespace detail {

class ListColorSearch {
public:
    ListColorSearch(const Graph& g, const ListAssignment& l, bool interchangeable, Budget budget)
        : g_(g), counter_(budget), interchangeable_(interchangeable) {
        const int n = g.order();
        if (static_cast<int>(l.lists.size()) != n) throw std::invalid_argument("one list per vertex required");
        std::map<int, int> idx;
        for (const auto& lst : l.lists)
            for (int c : lst) idx.emplace(c, 0);
        for (auto& [c, i] : idx) {
            i = static_cast<int>(palette_.size());
            palette_.push_back(c);
        }
        const int k = static_cast<int>(palette_.size());
        in_list_.assign(n, std::vector<char>(k, 0));
        blocked_.assign(n, std::vector<int>(k, 0));
        count_.assign(n, 0);
        color_.assign(n, -1);
        for (Vertex v = 0; v < n; ++v)
            for (int c : l.lists[v])
                if (!in_list_[v][idx[c]]) {
                    in_list_[v][idx[c]] = 1;
                    ++count_[v];
                }
    }

    ColoringResult run() {
        ColoringResult out;
        bool ok = true;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (count_[v] == 0) ok = false;
        if (ok) {
            // Singleton lists propagate before any branching.
            std::vector<Vertex> units;
            for (Vertex v = 0; v < g_.order(); ++v)
                if (count_[v] == 1) units.push_back(v);
            const std::size_t mark = trail_.size();
            const int saved_max = max_used_;
            if (propagate_units(units)) ok = dfs();
            if (!ok && !found_) undo(mark, saved_max);
        }
        out.nodes = counter_.used();
        if (found_) {
            out.verdict = Verdict::yes;
            for (Vertex v = 0; v < g_.order(); ++v) out.coloring.push_back(palette_[color_[v]]);
        } else {
            out.verdict = counter_.exhausted() ? Verdict::undecided : Verdict::no;
        }
        return out;
    }

private:
    struct Step {
        Vertex v;       // vertex coloured
        int unblocked;  // first entry of blocks_ owned by this step
    };

    bool assign(Vertex v, int c, std::vector<Vertex>& units) {
        color_[v] = c;
        trail_.push_back({v, static_cast<int>(blocks_.size())});
        max_used_ = std::max(max_used_, c);
        bool ok = true;
        for (Vertex u : g_.neighbors(v)) {
            if (color_[u] >= 0 || !in_list_[u][c]) continue;
            if (blocked_[u][c]++ == 0) {
                --count_[u];
                if (count_[u] == 0) ok = false;
                else if (count_[u] == 1) units.push_back(u);
            }
            blocks_.push_back({u, c});
        }
        return ok;
    }

    int only_color(Vertex v) const {
        for (int c = 0; c < static_cast<int>(palette_.size()); ++c)
            if (in_list_[v][c] && blocked_[v][c] == 0) return c;
        return -1;
    }

    bool propagate_units(std::vector<Vertex>& units) {
        while (!units.empty()) {
            const Vertex u = units.back();
            units.pop_back();
            if (color_[u] >= 0) continue;
            const int c = only_color(u);
            if (c < 0) return false;
            if (!assign(u, c, units)) return false;
        }
        return true;
    }

    void undo(std::size_t mark, int saved_max) {
        while (trail_.size() > mark) {
            const Step s = trail_.back();
            trail_.pop_back();
            while (static_cast<int>(blocks_.size()) > s.unblocked) {
                const auto [u, c] = blocks_.back();
                blocks_.pop_back();
                if (--blocked_[u][c] == 0) ++count_[u];
            }
            color_[s.v] = -1;
        }
        max_used_ = saved_max;
    }

    bool dfs() {
        Vertex best = -1;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (color_[v] < 0 && (best < 0 || count_[v] < count_[best])) best = v;
        if (best < 0) {
            found_ = true;
            return true;
        }
        if (count_[best] == 0) return false;
        const int limit = interchangeable_ ? max_used_ + 1 : static_cast<int>(palette_.size()) - 1;
        for (int c = 0; c < static_cast<int>(palette_.size()) && c <= limit; ++c) {
            if (!in_list_[best][c] || blocked_[best][c] != 0) continue;
            if (!counter_.tick()) return false;
            const std::size_t mark = trail_.size();
            const int saved_max = max_used_;
            std::vector<Vertex> units;
            if (assign(best, c, units) && propagate_units(units) && dfs()) return true;
            undo(mark, saved_max);
            if (counter_.exhausted()) return false;
        }
        return false;
    }

    const Graph& g_;
    BudgetCounter counter_;
    bool interchangeable_;
    std::vector<int> palette_;
    std::vector<std::vector<char>> in_list_;
    std::vector<std::vector<int>> blocked_;
    std::vector<int> count_;
    std::vector<int> color_;
    std::vector<Step> trail_;
    std::vector<std::pair<Vertex, int>> blocks_;
    int max_used_ = -1;
    bool found_ = false;
};

}  // namespace detail

inline ColoringResult list_color_feasible(const Graph& g, const ListAssignment& l, Budget budget = {}) {
    return detail::ListColorSearch(g, l, false, budget).run();
}

inline ColoringResult chromatic_feasible(const Graph& g, int r, Budget budget = {}) {
    if (r < 1) throw std::invalid_argument("chromatic_feasible needs r >= 1");
    return detail::ListColorSearch(g, ListAssignment::uniform(g.order(), r), true, budget).run();
}

inline bool is_proper_list_coloring(const Graph& g, const ListAssignment& l, const std::vector<int>& color) {
    if (static_cast<int>(color.size()) != g.order()) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!std::binary_search(l.lists[v].begin(), l.lists[v].end(), color[v])) return false;
    for (const auto& e : g.edges())
        if (color[e.u] == color[e.v]) return false;
    return true;
}

struct ChoosabilityResult {
    bool choosable = false;
    std::optional<ListAssignment> bad_assignment;  // r-lists with no proper colouring
    std::uint64_t assignments_checked = 0;
};

inline constexpr int kChoosableMaxOrder = 8;
inline constexpr int kChoosableMaxR = 3;

// Exhaustive over r-list assignments from a palette of r|V| colours, up to
// renaming colours: each new list draws fresh colours in increasing order.
inline ChoosabilityResult choosable(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("choosable needs r >= 1");
    if (g.order() > kChoosableMaxOrder || r > kChoosableMaxR)
        throw std::invalid_argument("choosable is exhaustive only for |V| <= 8 and r <= 3");
    const int n = g.order();
    // BFS order so that prefixes stay connected and fail early.
    std::vector<Vertex> order;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        order.push_back(s);
        for (std::size_t i = order.size() - 1; i < order.size(); ++i)
            for (Vertex u : g.neighbors(order[i]))
                if (!seen[u]) {
                    seen[u] = 1;
                    order.push_back(u);
                }
    }
    ChoosabilityResult out;
    std::vector<std::vector<int>> lists(n);
    int fail_len = n;

    auto prefix_feasible = [&](int len) {
        VertexSet pre(order.begin(), order.begin() + len);
        auto sub = induced_subgraph(g, pre);
        ListAssignment l;
        for (Vertex v : sub.to_parent) l.lists.push_back(lists[v]);
        ++out.assignments_checked;
        const auto res = list_color_feasible(sub.graph, l, Budget::unlimited());
        return res.verdict == Verdict::yes;
    };

    std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
        if (i == n) return true;
        const Vertex v = order[i];
        for (int a = std::min(r, used); a >= 0; --a) {
            const bool cont = for_each_combination(used, a, [&](const std::vector<int>& pick) {
                std::vector<int> lst = pick;
                for (int j = 0; j < r - a; ++j) lst.push_back(used + j);
                lists[v] = lst;
                if (!prefix_feasible(i + 1)) {
                    fail_len = i + 1;
                    return false;
                }
                return rec(i + 1, used + r - a);
            });
            if (!cont) return false;
        }
        return true;
    };

    out.choosable = rec(0, 0);
    if (!out.choosable) {
        // Remaining vertices get fresh colours, which cannot repair the prefix.
        int fresh = 0;
        for (int i = 0; i < fail_len; ++i)
            for (int c : lists[order[i]]) fresh = std::max(fresh, c + 1);
        for (int i = fail_len; i < n; ++i) {
            lists[order[i]].clear();
            for (int j = 0; j < r; ++j) lists[order[i]].push_back(fresh++);
        }
        ListAssignment bad;
        bad.lists = lists;
        out.bad_assignment = bad;
    }
    return out;
}

}  // namespace minorperc
