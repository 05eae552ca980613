// Minor and shallow-minor containment by exact branch-set search, model
// validation, and an exact test for minors of wedge families F ^_t Z.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "minorperc/common.hpp"
#include "minorperc/graph.hpp"

namespace minorperc {

// Radius bound for shallow minors. Unbounded means ordinary minors.
class Depth {
public:
    static Depth unbounded() { return Depth(); }
    static Depth at_most(int ell) {
        if (ell < 0) throw std::invalid_argument("depth must be non-negative");
        Depth d;
        d.value_ = ell;
        return d;
    }
    bool bounded() const { return value_.has_value(); }
    int value() const { return value_.value(); }
    std::string str() const { return bounded() ? std::to_string(*value_) : "inf"; }

private:
    std::optional<int> value_;
};

struct MinorModel {
    std::vector<VertexSet> branch_sets;  // branch_sets[x] for pattern vertex x
};

struct MinorResult {
    Verdict verdict = Verdict::undecided;
    std::optional<MinorModel> model;
    std::uint64_t nodes = 0;
};

// Empty string when the model is a valid (depth-bounded) H-minor model in G.
inline std::string model_error(const Graph& g, const Graph& h, const MinorModel& m, Depth depth = Depth::unbounded()) {
    if (static_cast<int>(m.branch_sets.size()) != h.order()) return "wrong number of branch sets";
    std::vector<int> owner(g.order(), -1);
    for (int x = 0; x < h.order(); ++x) {
        const auto& b = m.branch_sets[x];
        if (b.empty()) return "empty branch set " + std::to_string(x);
        for (Vertex v : b) {
            if (v < 0 || v >= g.order()) return "branch set vertex out of range";
            if (owner[v] >= 0) return "branch sets overlap at vertex " + std::to_string(v);
            owner[v] = x;
        }
        if (!is_connected_set(g, normalize(b))) return "branch set " + std::to_string(x) + " not connected";
        if (depth.bounded()) {
            std::vector<char> allowed(g.order(), 0);
            for (Vertex v : b) allowed[v] = 1;
            bool ok = false;
            for (Vertex c : b) {
                const auto d = bfs_distances(g, c, allowed);
                if (std::all_of(b.begin(), b.end(), [&](Vertex v) { return d[v] >= 0 && d[v] <= depth.value(); })) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return "branch set " + std::to_string(x) + " exceeds radius " + depth.str();
        }
    }
    std::set<Edge> realized;
    for (const auto& e : g.edges()) {
        const int a = owner[e.u], b = owner[e.v];
        if (a >= 0 && b >= 0 && a != b) realized.insert(make_edge(a, b));
    }
    for (const auto& e : h.edges())
        if (!realized.count(e)) return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not realized";
    return {};
}

inline bool validate_model(const Graph& g, const Graph& h, const MinorModel& m, Depth depth = Depth::unbounded()) {
    return model_error(g, h, m, depth).empty();
}

namespace detail {

// Host after deleting vertices of degree <= 1 (pattern min degree >= 2) and
// suppressing degree-2 vertices (pattern min degree >= 3).
struct ReducedHost {
    Graph graph;
    std::vector<Vertex> to_orig;
    std::map<Edge, std::vector<Vertex>> paths;  // reduced edge (orig ids) -> suppressed interior

    static ReducedHost build(const Graph& g, int pattern_min_degree) {
        const int n = g.order();
        std::vector<std::set<Vertex>> adj(n);
        for (const auto& e : g.edges()) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        std::map<Edge, std::vector<Vertex>> paths;
        std::vector<char> alive(n, 1);
        std::vector<Vertex> work(n);
        std::iota(work.begin(), work.end(), 0);
        auto drop_edge = [&](Vertex a, Vertex b) {
            adj[a].erase(b);
            adj[b].erase(a);
            paths.erase(make_edge(a, b));
        };
        while (!work.empty()) {
            const Vertex v = work.back();
            work.pop_back();
            if (!alive[v]) continue;
            const int d = static_cast<int>(adj[v].size());
            if (d <= 1 && pattern_min_degree >= 2) {
                alive[v] = 0;
                for (Vertex u : std::vector<Vertex>(adj[v].begin(), adj[v].end())) {
                    drop_edge(v, u);
                    work.push_back(u);
                }
            } else if (d == 2 && pattern_min_degree >= 3) {
                const Vertex x = *adj[v].begin(), y = *adj[v].rbegin();
                std::vector<Vertex> interior;
                auto take = [&](Vertex a) {
                    auto it = paths.find(make_edge(a, v));
                    if (it != paths.end()) interior.insert(interior.end(), it->second.begin(), it->second.end());
                };
                take(x);
                interior.push_back(v);
                take(y);
                alive[v] = 0;
                drop_edge(v, x);
                drop_edge(v, y);
                if (!adj[x].count(y)) {
                    adj[x].insert(y);
                    adj[y].insert(x);
                    paths[make_edge(x, y)] = interior;
                }
                work.push_back(x);
                work.push_back(y);
            }
        }
        ReducedHost out;
        std::vector<int> pos(n, -1);
        for (Vertex v = 0; v < n; ++v)
            if (alive[v]) {
                pos[v] = static_cast<int>(out.to_orig.size());
                out.to_orig.push_back(v);
            }
        std::vector<Edge> es;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v])
                for (Vertex u : adj[v])
                    if (u > v) es.push_back({pos[v], pos[u]});
        out.graph = Graph(static_cast<int>(out.to_orig.size()), std::move(es));
        out.paths = std::move(paths);
        return out;
    }

    MinorModel lift(const MinorModel& m, int n_orig) const {
        MinorModel out;
        std::vector<int> owner(n_orig, -1);
        for (std::size_t x = 0; x < m.branch_sets.size(); ++x) {
            VertexSet b;
            for (Vertex v : m.branch_sets[x]) {
                b.push_back(to_orig[v]);
                owner[to_orig[v]] = static_cast<int>(x);
            }
            out.branch_sets.push_back(b);
        }
        for (const auto& [e, interior] : paths) {
            int target = owner[e.u];
            if (target < 0 || owner[e.v] < 0) continue;
            for (Vertex w : interior) out.branch_sets[target].push_back(w);
        }
        for (auto& b : out.branch_sets) b = normalize(b);
        return out;
    }
};

class MinorSearch {
public:
    MinorSearch(const Graph& g, const Graph& h, Depth depth, Budget budget, int vertex_cap)
        : g_(g), h_(h), depth_(depth), counter_(budget), k_(h.order()), cap_(vertex_cap) {
        hadj_.assign(k_, std::vector<char>(k_, 0));
        for (const auto& e : h.edges()) hadj_[e.u][e.v] = hadj_[e.v][e.u] = 1;
        build_order();
        label_.assign(g.order(), -1);
        sets_.assign(k_, {});
        root_.assign(k_, -1);
        if (depth_.bounded()) {
            dist_.resize(g.order());
            for (Vertex v = 0; v < g.order(); ++v) dist_[v] = bfs_distances(g, v);
        }
    }

    std::optional<MinorModel> run() {
        if (k_ == 0) return MinorModel{};
        if (k_ > cap_) return std::nullopt;
        if (dfs()) {
            MinorModel m;
            for (auto s : sets_) m.branch_sets.push_back(normalize(s));
            return m;
        }
        return std::nullopt;
    }

    bool exhausted() const { return counter_.exhausted(); }
    std::uint64_t used() const { return counter_.used(); }

private:
    struct Option {
        int set;
        Vertex v;
    };

    void build_order() {
        std::vector<char> taken(k_, 0);
        for (int step = 0; step < k_; ++step) {
            int best = -1, best_links = -1;
            for (int x = 0; x < k_; ++x) {
                if (taken[x]) continue;
                int links = 0;
                for (int y = 0; y < k_; ++y) links += taken[y] && hadj_[x][y];
                if (best < 0 || links > best_links ||
                    (links == best_links && h_.degree(x) > h_.degree(best))) {
                    best = x;
                    best_links = links;
                }
            }
            taken[best] = 1;
            ord_.push_back(best);
        }
        // Twins are swapped by an automorphism, so their roots may be taken increasing.
        twin_before_.assign(k_, {});
        for (int p = 0; p < k_; ++p)
            for (int q = 0; q < p; ++q) {
                const int x = ord_[p], y = ord_[q];
                bool twin = true;
                for (int z = 0; z < k_ && twin; ++z)
                    if (z != x && z != y && hadj_[x][z] != hadj_[y][z]) twin = false;
                if (twin) twin_before_[x].push_back(y);
            }
    }

    bool allowed(int set, Vertex u) const {
        if (label_[u] != -1) return false;
        if (depth_.bounded()) return dist_[root_[set]][u] >= 0 && dist_[root_[set]][u] <= depth_.value();
        return u > root_[set];
    }

    void add(int set, Vertex v) {
        label_[v] = set;
        sets_[set].push_back(v);
        ++used_;
    }
    void remove_last(int set) {
        label_[sets_[set].back()] = -1;
        sets_[set].pop_back();
        --used_;
    }

    bool touches(int a, int b) const {
        for (Vertex v : sets_[a])
            for (Vertex u : g_.neighbors(v))
                if (label_[u] == b) return true;
        return false;
    }

    // Can sets a and b still be joined through free vertices either may absorb?
    bool connectable(int a, int b) const {
        std::vector<char> seen(g_.order(), 0);
        std::vector<Vertex> stack;
        auto push_nbrs = [&](Vertex v) {
            for (Vertex u : g_.neighbors(v)) {
                if (label_[u] == b) return true;
                if (!seen[u] && (allowed(a, u) || allowed(b, u))) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
            return false;
        };
        for (Vertex v : sets_[a])
            if (push_nbrs(v)) return true;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            if (push_nbrs(v)) return true;
        }
        return false;
    }

    bool radius_ok(int set) const {
        if (!depth_.bounded()) return true;
        std::vector<char> allow(g_.order(), 0);
        for (Vertex v : sets_[set]) allow[v] = 1;
        const auto d = bfs_distances(g_, root_[set], allow);
        for (Vertex v : sets_[set])
            if (d[v] < 0 || d[v] > depth_.value()) return false;
        return true;
    }

    std::vector<Option> frontier(int set) const {
        std::vector<Option> out;
        std::vector<char> seen(g_.order(), 0);
        for (Vertex v : sets_[set])
            for (Vertex u : g_.neighbors(v))
                if (!seen[u] && allowed(set, u)) {
                    seen[u] = 1;
                    out.push_back({set, u});
                }
        return out;
    }

    std::string key() const {
        std::string s(label_.size(), '\0');
        for (std::size_t i = 0; i < label_.size(); ++i) s[i] = static_cast<char>(label_[i] + 1);
        if (depth_.bounded())
            for (Vertex r : root_) s += std::to_string(r) + ",";
        return s;
    }

    bool dfs() {
        if (!counter_.tick()) return false;
        if (seen_.size() < kMemoLimit && !seen_.insert(key()).second) return false;

        // Demands: unrealized pattern edges between placed vertices, then radius violations.
        std::vector<Option> best;
        bool have = false;
        for (int p = 0; p < placed_; ++p)
            for (int q = 0; q < p; ++q) {
                const int a = ord_[p], b = ord_[q];
                if (!hadj_[a][b] || touches(a, b)) continue;
                if (used_ + (k_ - placed_) + 1 > cap_) return false;
                if (!connectable(a, b)) return false;
                auto opts = frontier(a);
                auto more = frontier(b);
                opts.insert(opts.end(), more.begin(), more.end());
                if (!have || opts.size() < best.size()) {
                    best = std::move(opts);
                    have = true;
                }
            }
        if (!have && depth_.bounded())
            for (int p = 0; p < placed_ && !have; ++p)
                if (!radius_ok(ord_[p])) {
                    if (used_ + (k_ - placed_) + 1 > cap_) return false;
                    best = frontier(ord_[p]);
                    have = true;
                }
        if (have) {
            for (const auto& o : best) {
                add(o.set, o.v);
                if (dfs()) return true;
                remove_last(o.set);
                if (counter_.exhausted()) return false;
            }
            return false;
        }
        if (placed_ == k_) return true;

        const int x = ord_[placed_];
        if (used_ + (k_ - placed_) > cap_) return false;
        Vertex lo = -1;
        for (int y : twin_before_[x]) lo = std::max(lo, root_[y]);
        std::vector<std::pair<int, Vertex>> cands;
        for (Vertex v = lo + 1; v < g_.order(); ++v) {
            if (label_[v] != -1) continue;
            int score = 0;
            bool ok = true;
            for (int p = 0; p < placed_ && ok; ++p) {
                const int y = ord_[p];
                if (!hadj_[x][y]) continue;
                bool adj = false;
                for (Vertex u : g_.neighbors(v))
                    if (label_[u] == y) adj = true;
                score += adj;
                if (depth_.bounded()) {
                    const int d = dist_[v][root_[y]];
                    if (d < 0 || d > 2 * depth_.value() + 1) ok = false;
                }
            }
            if (ok) cands.push_back({-score * g_.order() - g_.degree(v), v});
        }
        std::stable_sort(cands.begin(), cands.end());
        for (const auto& [score, v] : cands) {
            root_[x] = v;
            add(x, v);
            ++placed_;
            if (dfs()) return true;
            --placed_;
            remove_last(x);
            root_[x] = -1;
            if (counter_.exhausted()) return false;
        }
        return false;
    }

    static constexpr std::size_t kMemoLimit = 4'000'000;

    const Graph& g_;
    const Graph& h_;
    Depth depth_;
    BudgetCounter counter_;
    int k_;
    int cap_;
    std::vector<std::vector<char>> hadj_;
    std::vector<int> ord_;
    std::vector<std::vector<int>> twin_before_;
    std::vector<std::vector<int>> dist_;
    std::vector<int> label_;
    std::vector<std::vector<Vertex>> sets_;
    std::vector<Vertex> root_;
    int placed_ = 0;
    int used_ = 0;
    std::unordered_set<std::string> seen_;
};

}  // namespace detail

// H is a minor of G with every branch set of radius at most depth.
inline MinorResult contains_shallow_minor(const Graph& g, const Graph& h, Depth depth, Budget budget = {}) {
    MinorResult out;
    if (h.order() > g.order() || h.size() > g.size()) {
        out.verdict = Verdict::no;
        return out;
    }
    // Isolated pattern vertices take any leftover host vertices.
    VertexSet core_vertices, isolated;
    for (Vertex x = 0; x < h.order(); ++x) (h.degree(x) > 0 ? core_vertices : isolated).push_back(x);
    const Subgraph hp = induced_subgraph(h, core_vertices);
    const int cap = g.order() - static_cast<int>(isolated.size());

    const bool reduce = !depth.bounded() && isolated.empty() && hp.graph.order() > 0 && hp.graph.min_degree() >= 2;
    detail::ReducedHost red;
    if (reduce) red = detail::ReducedHost::build(g, hp.graph.min_degree());
    const Graph& host = reduce ? red.graph : g;

    detail::MinorSearch search(host, hp.graph, depth, budget, reduce ? host.order() : cap);
    auto found = search.run();
    out.nodes = search.used();
    if (!found) {
        out.verdict = search.exhausted() ? Verdict::undecided : Verdict::no;
        return out;
    }
    MinorModel m = reduce ? red.lift(*found, g.order()) : *found;
    MinorModel full;
    full.branch_sets.assign(h.order(), {});
    std::vector<char> used(g.order(), 0);
    for (std::size_t i = 0; i < core_vertices.size(); ++i) {
        full.branch_sets[core_vertices[i]] = m.branch_sets[i];
        for (Vertex v : m.branch_sets[i]) used[v] = 1;
    }
    Vertex next = 0;
    for (Vertex x : isolated) {
        while (used[next]) ++next;
        full.branch_sets[x] = {next};
        used[next] = 1;
    }
    if (!validate_model(g, h, full, depth)) throw std::logic_error("minor search produced an invalid model");
    out.verdict = Verdict::yes;
    out.model = std::move(full);
    return out;
}

inline MinorResult contains_minor(const Graph& g, const Graph& h, Budget budget = {}) {
    return contains_shallow_minor(g, h, Depth::unbounded(), budget);
}

struct WedgeMinorResult {
    Verdict verdict = Verdict::undecided;
    int copies = 0;                   // t of the certificate
    std::optional<MinorModel> model;  // model in wedge(F, Z, copies)
    std::uint64_t nodes = 0;
};

// Decides whether H is a minor of F ^_t Z for some t >= 1.
//
// Branch sets meeting Z come from at most |Z| pattern vertices S; every other
// branch set lies in one copy, so each component of H - S lives in a single copy.
// Copies can be duplicated freely, so per copy it suffices to enumerate labelings
// of F - Z serving one component, or none, and pool what they contribute.
inline WedgeMinorResult wedge_family_minor(const Graph& f, const VertexSet& z_in, const Graph& h, Budget budget = {}) {
    const VertexSet z = normalize(z_in);
    const int nz = static_cast<int>(z.size()), k = h.order();
    std::vector<char> in_z(f.order(), 0);
    for (Vertex v : z) in_z.at(v) = 1;
    VertexSet u;
    for (Vertex v = 0; v < f.order(); ++v)
        if (!in_z[v]) u.push_back(v);
    const int nu = static_cast<int>(u.size());
    std::vector<std::vector<char>> hadj(k, std::vector<char>(k, 0));
    for (const auto& e : h.edges()) hadj[e.u][e.v] = hadj[e.v][e.u] = 1;

    WedgeMinorResult out;
    BudgetCounter counter(budget);
    // mu[i]: pattern vertex on z[i], or -1.
    std::vector<int> mu(nz, -1);

    struct Pattern {
        std::vector<int> label;  // per vertex of u, pattern vertex or -1
        std::set<Edge> realized;
        std::vector<std::pair<int, int>> merges;  // heart positions joined inside the copy
    };

    auto evaluate = [&](const std::vector<int>& label, const std::vector<int>& comp_of, int comp,
                        Pattern& pat) -> bool {
        std::vector<int> lab(f.order(), -1);
        for (int i = 0; i < nz; ++i) lab[z[i]] = mu[i];
        for (int i = 0; i < nu; ++i) lab[u[i]] = label[i];
        // Pieces of each label inside the copy.
        std::vector<int> piece(f.order(), -1);
        int npieces = 0;
        for (int i = 0; i < nu; ++i) {
            const Vertex s = u[i];
            if (lab[s] < 0 || piece[s] >= 0) continue;
            std::vector<Vertex> stack{s};
            piece[s] = npieces;
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : f.neighbors(v))
                    if (!in_z[w] && piece[w] < 0 && lab[w] == lab[s]) {
                        piece[w] = npieces;
                        stack.push_back(w);
                    }
            }
            ++npieces;
        }
        std::vector<int> piece_label(npieces, -1);
        std::vector<std::vector<int>> piece_heart(npieces);
        for (int i = 0; i < nu; ++i)
            if (piece[u[i]] >= 0) piece_label[piece[u[i]]] = lab[u[i]];
        for (int i = 0; i < nz; ++i)
            for (Vertex w : f.neighbors(z[i]))
                if (!in_z[w] && piece[w] >= 0 && lab[w] == mu[i] && mu[i] >= 0) piece_heart[piece[w]].push_back(i);
        std::vector<int> pieces_of(k, 0);
        for (int p = 0; p < npieces; ++p) {
            const int x = piece_label[p];
            ++pieces_of[x];
            if (comp_of[x] < 0 && piece_heart[p].empty()) return false;  // heart label cut off from its heart
        }
        for (int x = 0; x < k; ++x)
            if (comp_of[x] >= 0 && comp_of[x] == comp && pieces_of[x] != 1) return false;
        pat.label = label;
        pat.realized.clear();
        pat.merges.clear();
        for (const auto& e : f.edges()) {
            const int a = lab[e.u], b = lab[e.v];
            if (a >= 0 && b >= 0 && a != b && hadj[a][b]) pat.realized.insert(make_edge(a, b));
        }
        for (int p = 0; p < npieces; ++p)
            for (std::size_t j = 1; j < piece_heart[p].size(); ++j)
                pat.merges.push_back({piece_heart[p][0], piece_heart[p][j]});
        return true;
    };

    std::function<bool(int)> over_mu = [&](int i) -> bool {
        if (i < nz) {
            for (int x = -1; x < k; ++x) {
                mu[i] = x;
                if (over_mu(i + 1)) return true;
                if (counter.exhausted()) return false;
            }
            mu[i] = -1;
            return false;
        }
        if (!counter.tick()) return false;
        std::vector<char> in_s(k, 0);
        for (int x : mu)
            if (x >= 0) in_s[x] = 1;
        // Components of H - S.
        std::vector<int> comp_of(k, -1);
        int ncomp = 0;
        for (int x = 0; x < k; ++x) {
            if (in_s[x] || comp_of[x] >= 0) continue;
            std::vector<int> stack{x};
            comp_of[x] = ncomp;
            while (!stack.empty()) {
                const int y = stack.back();
                stack.pop_back();
                for (int w = 0; w < k; ++w)
                    if (hadj[y][w] && !in_s[w] && comp_of[w] < 0) {
                        comp_of[w] = ncomp;
                        stack.push_back(w);
                    }
            }
            ++ncomp;
        }
        std::vector<int> s_list;
        for (int x = 0; x < k; ++x)
            if (in_s[x]) s_list.push_back(x);

        std::vector<Pattern> pool;            // every valid pattern, pooled
        std::vector<int> comp_pattern(ncomp, -1);  // index in pool realizing the component
        for (int c = -1; c < ncomp; ++c) {
            std::vector<int> alphabet = s_list;
            for (int x = 0; x < k; ++x)
                if (comp_of[x] == c && c >= 0) alphabet.push_back(x);
            const int base = static_cast<int>(alphabet.size()) + 1;
            std::vector<int> digit(nu, 0), label(nu, -1);
            while (true) {
                if (!counter.tick()) return false;
                for (int j = 0; j < nu; ++j) label[j] = digit[j] == 0 ? -1 : alphabet[digit[j] - 1];
                Pattern pat;
                if (evaluate(label, comp_of, c, pat)) {
                    bool full = c >= 0;
                    for (int x = 0; x < k && full; ++x)
                        for (int y = 0; y < k && full; ++y)
                            if (hadj[x][y] && comp_of[x] == c && !pat.realized.count(make_edge(x, y)))
                                full = false;
                    if (c >= 0 && full && comp_pattern[c] < 0) comp_pattern[c] = static_cast<int>(pool.size());
                    if (c < 0 || full) pool.push_back(std::move(pat));
                }
                int j = 0;
                while (j < nu && ++digit[j] == base) digit[j++] = 0;
                if (j == nu) break;
            }
            if (c >= 0 && comp_pattern[c] < 0) return false;
        }
        // Heart connectivity and S-S edges from the pool.
        std::vector<int> parent(nz);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a == b) return false;
            parent[a] = b;
            return true;
        };
        std::set<Edge> ss_done;
        for (int i = 0; i < nz; ++i)
            for (int j = 0; j < nz; ++j)
                if (i < j && f.adjacent(z[i], z[j]) && mu[i] >= 0 && mu[j] >= 0) {
                    if (mu[i] == mu[j]) unite(i, j);
                    else if (hadj[mu[i]][mu[j]]) ss_done.insert(make_edge(mu[i], mu[j]));
                }
        std::vector<int> chosen;
        for (int c = 0; c < ncomp; ++c) chosen.push_back(comp_pattern[c]);
        for (int p : chosen) {
            for (auto [a, b] : pool[p].merges) unite(a, b);
            for (const auto& e : pool[p].realized)
                if (in_s[e.u] && in_s[e.v]) ss_done.insert(e);
        }
        for (std::size_t p = 0; p < pool.size(); ++p) {
            bool useful = false;
            for (auto [a, b] : pool[p].merges) useful |= find(a) != find(b);
            for (const auto& e : pool[p].realized)
                if (in_s[e.u] && in_s[e.v] && !ss_done.count(e)) useful = true;
            if (!useful) continue;
            chosen.push_back(static_cast<int>(p));
            for (auto [a, b] : pool[p].merges) unite(a, b);
            for (const auto& e : pool[p].realized)
                if (in_s[e.u] && in_s[e.v]) ss_done.insert(e);
        }
        for (int i = 0; i < nz; ++i)
            for (int j = 0; j < i; ++j)
                if (mu[i] >= 0 && mu[i] == mu[j] && find(i) != find(j)) return false;
        for (const auto& e : h.edges())
            if (in_s[e.u] && in_s[e.v] && !ss_done.count(e)) return false;

        // Certificate.
        std::sort(chosen.begin(), chosen.end());
        chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
        const int t = std::max<int>(1, static_cast<int>(chosen.size()));
        const WedgeResult w = wedge(f, z, t);
        MinorModel m;
        m.branch_sets.assign(k, {});
        for (int i = 0; i < nz; ++i)
            if (mu[i] >= 0) m.branch_sets[mu[i]].push_back(z[i]);
        for (std::size_t c = 0; c < chosen.size(); ++c)
            for (int j = 0; j < nu; ++j) {
                const int x = pool[chosen[c]].label[j];
                if (x >= 0) m.branch_sets[x].push_back(w.id_map[c][u[j]]);
            }
        for (auto& b : m.branch_sets) b = normalize(b);
        const std::string err = model_error(w.graph, h, m);
        if (!err.empty()) throw std::logic_error("wedge certificate invalid: " + err);
        out.copies = t;
        out.model = std::move(m);
        return true;
    };

    const bool found = over_mu(0);
    out.nodes = counter.used();
    out.verdict = found ? Verdict::yes : counter.exhausted() ? Verdict::undecided : Verdict::no;
    return out;
}

}  // namespace minorperc
