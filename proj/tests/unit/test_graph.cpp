#include <gtest/gtest.h>

#include "minorperc/canonical.hpp"
#include "minorperc/graph.hpp"
#include "support/oracles.hpp"

using namespace minorperc;

TEST(Graph, MergesParallelEdgesAndSorts) {
    Graph g(4, {{2, 1}, {1, 2}, {0, 3}});
    EXPECT_EQ(g.size(), 2);
    EXPECT_EQ(g.edges()[0], (Edge{0, 3}));
    EXPECT_EQ(g.edges()[1], (Edge{1, 2}));
    EXPECT_TRUE(g.adjacent(2, 1));
    EXPECT_FALSE(g.adjacent(0, 1));
    EXPECT_EQ(g.edge_index(2, 1), 1u);
    EXPECT_FALSE(g.edge_index(0, 1).has_value());
}

TEST(Graph, RejectsLoopsAndBadIds) {
    EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Graph(-1), std::invalid_argument);
}

TEST(Graph, NamedFamiliesHaveExpectedCounts) {
    EXPECT_EQ(complete_graph(5).size(), 10);
    EXPECT_EQ(cycle_graph(5).size(), 5);
    EXPECT_EQ(path_graph(4).size(), 3);
    const Graph k33 = complete_bipartite(3, 3);
    EXPECT_EQ(k33.size(), 9);
    EXPECT_FALSE(k33.adjacent(0, 1));
    EXPECT_TRUE(k33.adjacent(0, 3));
    const Graph p = petersen_graph();
    EXPECT_EQ(p.order(), 10);
    EXPECT_EQ(p.size(), 15);
    EXPECT_EQ(p.min_degree(), 3);
    EXPECT_EQ(p.max_degree(), 3);
    EXPECT_EQ(oracle::tau(p), 6);
}

TEST(Graph, JoinShiftsSecondOperand) {
    const Graph g = join(empty_graph(2), copies(complete_graph(2), 3));
    EXPECT_EQ(g.order(), 8);
    EXPECT_EQ(g.size(), 2 * 6 + 3);
    EXPECT_TRUE(g.adjacent(2, 3));
    EXPECT_FALSE(g.adjacent(0, 1));
    EXPECT_FALSE(g.adjacent(3, 4));
}

TEST(Graph, WedgeOfStarOnLeavesIsCompleteBipartite) {
    const Graph star = star_graph(4);
    const auto w = wedge(star, {1, 2, 3, 4}, 3);
    EXPECT_EQ(w.graph.order(), 7);
    EXPECT_TRUE(isomorphic(w.graph, complete_bipartite(3, 4)));
    EXPECT_EQ(w.id_map[0][0], 0);
    EXPECT_EQ(w.id_map[2][0], 6);
    EXPECT_EQ(w.id_map[2][3], 3);
}

TEST(Graph, WedgeRejectsZeroCopies) { EXPECT_THROW(wedge(complete_graph(3), {0}, 0), std::invalid_argument); }

TEST(Graph, ContractEdgeMergesNeighbourhoods) {
    const Graph c = contract_edge(cycle_graph(5), 0, 1);
    EXPECT_EQ(c.order(), 4);
    EXPECT_TRUE(isomorphic(c, cycle_graph(4)));
    EXPECT_THROW(contract_edge(cycle_graph(5), 0, 2), std::invalid_argument);
}

TEST(Graph, ComponentsAndDistances) {
    const Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
    const auto comps = components(g);
    ASSERT_EQ(comps.size(), 3u);
    EXPECT_EQ(comps[0], (VertexSet{0, 1, 2}));
    EXPECT_EQ(comps[2], (VertexSet{5}));
    EXPECT_EQ(distance(g, 0, 2), 2);
    EXPECT_FALSE(distance(g, 0, 3).has_value());
    EXPECT_EQ(count_isolated(g), 1);
}

TEST(Graph, BallsRespectTheAllowedSet) {
    const Graph p = path_graph(6);
    EXPECT_EQ(neighborhood_ball(p, {0, 1, 2, 3, 4, 5}, 2, 1), (VertexSet{1, 2, 3}));
    EXPECT_EQ(neighborhood_ball(p, {0, 1, 2, 4, 5}, 2, 3), (VertexSet{0, 1, 2}));
    EXPECT_TRUE(neighborhood_ball(p, {2}, 2, -1).empty());
    EXPECT_EQ(open_neighborhood(p, {2, 3}), (VertexSet{1, 4}));
}

TEST(Graph, InducedAndRemovedSubgraphsTrackParents) {
    const auto s = remove_vertices(complete_graph(5), {1, 3});
    EXPECT_EQ(s.graph.order(), 3);
    EXPECT_EQ(s.graph.size(), 3);
    EXPECT_EQ(s.to_parent, (VertexSet{0, 2, 4}));
}

TEST(Canonical, DistinguishesAndIdentifies) {
    EXPECT_TRUE(isomorphic(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), Graph(4, {{3, 0}, {0, 2}, {2, 1}})));
    EXPECT_FALSE(isomorphic(path_graph(4), star_graph(3)));
    EXPECT_FALSE(isomorphic(cycle_graph(6), copies(complete_graph(3), 2)));
    // Colours must be respected.
    const Graph p = path_graph(3);
    EXPECT_NE(canonical_form(p, {1, 0, 0}), canonical_form(p, {0, 1, 0}));
    EXPECT_EQ(canonical_form(p, {1, 0, 0}), canonical_form(p, {0, 0, 1}));
}
