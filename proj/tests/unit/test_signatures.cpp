#include <gtest/gtest.h>

#include <queue>

#include "minorperc/constructions.hpp"
#include "minorperc/signatures.hpp"
#include "support/oracles.hpp"

using namespace minorperc;

namespace {

// Connected inside `member` with every vertex within k of the root, and at
// least r distinct Y-neighbours.
bool is_span(const Graph& g, const std::vector<char>& in_y, Vertex root, const std::vector<char>& member, int k, int r) {
    const int n = g.order();
    std::vector<int> dist(n, -1);
    std::queue<Vertex> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        const Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (member[w] && dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    std::set<Vertex> ys;
    for (Vertex u = 0; u < n; ++u) {
        if (!member[u]) continue;
        if (in_y[u] || dist[u] < 0 || dist[u] > k) return false;
        for (Vertex w : g.neighbors(u))
            if (in_y[w]) ys.insert(w);
    }
    return static_cast<int>(ys.size()) >= r;
}

}  // namespace

TEST(Adherence, Examples) {
    const Graph star = star_graph(5);
    EXPECT_TRUE(is_r_adherent(star, {1, 2, 3}, {0}, 3));
    EXPECT_FALSE(is_r_adherent(star, {1, 2, 3}, {0}, 4));
    EXPECT_FALSE(is_r_adherent(star, {1, 2, 3}, {0, 1}, 1));
    EXPECT_TRUE(is_r_adherent(star, {1, 2, 3}, {0, 4}, 3));
}

TEST(MinimalSpan, Examples) {
    const Graph p4 = path_graph(4);
    const auto s = minimal_span(p4, {3}, 0, 3, 1);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->vertices, (VertexSet{0, 1, 2}));
    ASSERT_EQ(s->paths.size(), 1u);
    EXPECT_EQ(s->paths[0], (std::vector<Vertex>{0, 1, 2}));
    EXPECT_FALSE(minimal_span(p4, {3}, 0, 3, 2).has_value());
    EXPECT_FALSE(minimal_span(p4, {3}, 0, 1, 1).has_value());

    const auto c = minimal_span(star_graph(5), {1, 2, 3}, 0, 1, 3);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->vertices, (VertexSet{0}));
    EXPECT_THROW(minimal_span(p4, {3}, 3, 1, 1), std::invalid_argument);
    EXPECT_THROW(minimal_span(p4, {3}, 0, -1, 1), std::invalid_argument);
}

TEST(MinimalSpan, RandomInstancesValidateAndAreMinimal) {
    std::mt19937_64 rng(31);
    int found = 0;
    for (std::uint64_t s = 0; s < 150; ++s) {
        const Graph g = oracle::random_graph(12, 16 + static_cast<int>(s % 8), 4000 + s);
        std::vector<char> in_y(g.order(), 0);
        VertexSet y;
        for (Vertex v = 1; v < g.order(); ++v)
            if (rng() % 3 == 0) {
                in_y[v] = 1;
                y.push_back(v);
            }
        const int k = static_cast<int>(s % 3), r = 1 + static_cast<int>(s % 3);
        const auto span = minimal_span(g, y, 0, k, r);
        // Existence: the whole k-ball in G - Y is the largest candidate.
        std::vector<char> allowed(g.order());
        for (Vertex v = 0; v < g.order(); ++v) allowed[v] = !in_y[v];
        const auto ball = oracle::ball(g, allowed, 0, k);
        EXPECT_EQ(span.has_value(), is_span(g, in_y, 0, ball, k, r));
        if (!span) continue;
        ++found;
        std::vector<char> member(g.order(), 0);
        for (Vertex v : span->vertices) member[v] = 1;
        EXPECT_TRUE(is_span(g, in_y, 0, member, k, r));
        EXPECT_LE(static_cast<int>(span->vertices.size()), k * r + 1);
        EXPECT_LE(static_cast<int>(span->paths.size()), std::max(r, 1));
        for (const auto& path : span->paths) {
            EXPECT_EQ(path.front(), 0);
            EXPECT_LE(static_cast<int>(path.size()) - 1, k);
            for (std::size_t i = 1; i < path.size(); ++i) EXPECT_TRUE(g.adjacent(path[i - 1], path[i]));
        }
        for (Vertex v : span->vertices) {
            if (v == 0) continue;
            member[v] = 0;
            EXPECT_FALSE(is_span(g, in_y, 0, member, k, r)) << "removable vertex " << v;
            member[v] = 1;
        }
    }
    EXPECT_GT(found, 20);
}

TEST(Island, JoinWithMatchingCopies) {
    const Graph g = gen_join_cliques(2, 1, 5);
    const auto res = island_partition(g, 2, 0, 2, Rational(1, 2));
    ASSERT_TRUE(res.success);
    EXPECT_EQ(res.x.size(), 10u);
    EXPECT_GT(res.z.size(), 0u);
    const auto chk = oracle::check_island(g, 2, 0, 2, 1, 2, res.x, res.z);
    EXPECT_TRUE(chk.ok) << chk.failure;
}

TEST(Island, PathWithZeroBeta) {
    const Graph g = path_graph(6);
    const auto res = island_partition(g, 2, 0, 5, Rational(0));
    ASSERT_TRUE(res.success);
    EXPECT_EQ(res.x.size(), 6u);
    EXPECT_FALSE(res.z.empty());
    const auto chk = oracle::check_island(g, 2, 0, 5, 0, 1, res.x, res.z);
    EXPECT_TRUE(chk.ok) << chk.failure;
}

TEST(Island, NoLowDegreeVerticesFails) {
    const auto res = island_partition(complete_graph(5), 2, 0, 1, Rational(1));
    EXPECT_FALSE(res.success);
    EXPECT_LE(res.rounds, island_round_limit(2, 0));
    EXPECT_THROW(island_partition(complete_graph(5), 0, 0, 1, Rational(1)), std::invalid_argument);
    EXPECT_THROW(island_partition(complete_graph(5), 2, 0, 1, Rational(-1)), std::invalid_argument);
}

TEST(Island, RandomSparseOutputsSatisfyConditions) {
    int successes = 0;
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Graph g = s % 2 ? oracle::random_forest(25, 77 + s) : oracle::random_graph(20, 24, 77 + s);
        for (int r = 2; r <= 3; ++r)
            for (int ell = 0; ell <= 1; ++ell) {
                const auto res = island_partition(g, r, ell, 4, Rational(1, 10));
                EXPECT_LE(res.rounds, island_round_limit(r, ell));
                if (!res.success) continue;
                ++successes;
                const auto chk = oracle::check_island(g, r, ell, 4, 1, 10, res.x, res.z);
                EXPECT_TRUE(chk.ok) << chk.failure << " seed " << s << " r=" << r << " ell=" << ell;
            }
    }
    EXPECT_GT(successes, 0);
}

TEST(WeakCollection, Examples) {
    const auto k3 = build_weak_collection(complete_graph(3), 2, 2);
    ASSERT_EQ(k3.members.size(), 1u);
    EXPECT_EQ(k3.members[0], (EdgeSet{{0, 1}, {0, 2}}));
    EXPECT_TRUE(verify_collection(complete_graph(3), k3, 2).covers);
    EXPECT_TRUE(build_weak_collection(path_graph(4), 2, 2).members.empty());
    const auto k4 = build_weak_collection(complete_graph(4), 2, 3);
    EXPECT_EQ(k4.q, 2);
    EXPECT_EQ(k4.members.size(), 4u);
    EXPECT_TRUE(verify_collection(complete_graph(4), k4, 2).covers);
    EXPECT_THROW(build_weak_collection(complete_graph(4), 2, 2), std::invalid_argument);
}

TEST(WeakCollection, CoversRandomGraphs) {
    for (std::uint64_t s = 0; s < 25; ++s) {
        const Graph g = oracle::random_graph(8, 10 + static_cast<int>(s % 6), 300 + s);
        for (int r = 2; r <= 3; ++r) {
            const auto c = build_weak_collection(g, r, g.order());
            EXPECT_TRUE(verify_collection(g, c, r).covers) << to_edge_list(g);
            ASSERT_TRUE(c.c_bound.has_value());
            EXPECT_LE(Rational(static_cast<std::int64_t>(c.members.size())), *c.c_bound * Rational(g.order()));
        }
    }
}

TEST(SufficientCollection, WeakPickerReproducesWeakBuilder) {
    for (const Graph& g : {complete_graph(4), petersen_graph(), gen_join_cliques(3, 1, 3)}) {
        const auto a = build_weak_collection(g, 2, g.max_degree());
        const auto b = build_sufficient_collection(g, 2, weak_picker(g.max_degree()));
        EXPECT_EQ(a.q, b.q);
        EXPECT_EQ(a.members, b.members);
    }
}

TEST(SufficientCollection, PairPickerOnJoin) {
    const Graph g = gen_join_cliques(3, 1, 3);  // heart {0,1}, copies {2,3},{4,5},{6,7}
    Picker pk;
    pk.zeta = 2;
    pk.a = 3;
    pk.t = 2;
    pk.choose = [](const Graph& h, const std::vector<char>& alive) {
        for (Vertex v = 2; v < h.order(); ++v)
            if (alive[v]) {
                const Vertex mate = v % 2 ? v - 1 : v + 1;
                if (alive[mate]) return PickerChoice{{v, mate}, v};
                return PickerChoice{{v}, v};
            }
        for (Vertex v = 0; v < h.order(); ++v)
            if (alive[v]) return PickerChoice{{v}, v};
        return PickerChoice{};
    };
    const auto c = build_sufficient_collection(g, 3, pk);
    EXPECT_EQ(c.q, 5);
    EXPECT_EQ(c.members.size(), 3u);
    EXPECT_TRUE(verify_collection(g, c, 3).covers);
    EXPECT_TRUE(build_sufficient_collection(empty_graph(0), 3, pk).members.empty());

    Picker bad = pk;
    bad.a = 2;
    EXPECT_THROW(build_sufficient_collection(g, 3, bad), PickerContractError);
}

TEST(Verify, EmptyCollectionFailsAndShapeIsChecked) {
    SignatureCollection empty;
    empty.q = 2;
    const auto rep = verify_collection(complete_graph(4), empty, 2);
    EXPECT_FALSE(rep.covers);
    ASSERT_TRUE(rep.counterexample.has_value());
    SignatureCollection wrong{2, {{{0, 1}}}, std::nullopt};
    EXPECT_THROW(verify_collection(complete_graph(4), wrong, 2), std::invalid_argument);
    SignatureCollection nonedge{2, {{{0, 1}, {0, 2}}}, std::nullopt};
    EXPECT_THROW(verify_collection(path_graph(4), nonedge, 2), std::invalid_argument);
    EXPECT_THROW(verify_collection(complete_graph(7), empty, 2), std::invalid_argument);
}

TEST(Verify, SampledProbeFindsGaps) {
    const Graph g = complete_graph(7);
    const auto c = build_weak_collection(g, 2, 6);
    EXPECT_TRUE(verify_collection_sampled(g, c, 2, 50, 5).covers);
    SignatureCollection empty;
    empty.q = 2;
    const auto rep = verify_collection_sampled(g, empty, 2, 50, 5);
    EXPECT_FALSE(rep.covers);
    EXPECT_FALSE(rep.exhaustive);
}

TEST(Collection, JsonRoundTrip) {
    const auto c = build_weak_collection(complete_graph(4), 2, 3);
    const auto back = collection_from_json(nlohmann::json::parse(to_json(c).dump()));
    EXPECT_EQ(back.q, c.q);
    EXPECT_EQ(back.members, c.members);
    EXPECT_EQ(back.c_bound, c.c_bound);
    EXPECT_THROW(collection_from_json(nlohmann::json::parse(R"({"members": []})")), ParseError);
}

TEST(UnionBound, MatchesInclusionExclusion) {
    const Graph g = complete_graph(4);
    const auto c = build_weak_collection(g, 2, 3);
    const auto rep = union_bound_check(g, c, 0.3, 20000, 11);
    const double exact = oracle::inclusion_exclusion(c.members, 0.3);
    EXPECT_NEAR(rep.bound, 0.36, 1e-12);
    EXPECT_LE(exact, rep.bound);
    EXPECT_TRUE(rep.holds);
    EXPECT_NEAR(rep.estimate.p_hat, exact, 4 * std::sqrt(exact * (1 - exact) / 20000));

    EXPECT_EQ(union_bound_check(g, c, 0.0, 100, 1).estimate.p_hat, 0.0);
    const auto one = union_bound_check(g, c, 1.0, 100, 1);
    EXPECT_EQ(one.estimate.p_hat, 1.0);
    EXPECT_TRUE(one.holds);
}
