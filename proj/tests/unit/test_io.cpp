#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "minorperc/constructions.hpp"
#include "minorperc/io.hpp"
#include "minorperc/signatures.hpp"

using namespace minorperc;

TEST(EdgeList, RoundTrips) {
    const Graph g = petersen_graph();
    const Graph back = parse_edge_list(to_edge_list(g));
    EXPECT_EQ(back.order(), 10);
    EXPECT_EQ(back.edges(), g.edges());
}

TEST(EdgeList, RejectsMalformedInput) {
    EXPECT_THROW(parse_edge_list(""), ParseError);
    EXPECT_THROW(parse_edge_list("3 1\n1 0\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 2\n0 1\n0 1\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
}

TEST(GraphJson, RoundTripsAndValidates) {
    const Graph g = complete_bipartite(2, 3);
    EXPECT_EQ(graph_from_json(to_json(g)).edges(), g.edges());
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2})")), ParseError);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,0]]})")), ParseError);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":{"a":1}})")), ParseError);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":-1,"edges":[]})")), ParseError);
}

TEST(LoadGraph, SniffsFormat) {
    const std::string a = ::testing::TempDir() + "g.json", b = ::testing::TempDir() + "g.txt";
    std::ofstream(a) << "  {\"n\":3,\"edges\":[[0,1],[1,2]]}";
    std::ofstream(b) << "3 1\n0 2\n";
    EXPECT_EQ(load_graph(a).size(), 2);
    EXPECT_EQ(load_graph(b).size(), 1);
    std::ofstream(a) << "{\"n\":3,";
    EXPECT_THROW(load_graph(a), ParseError);
    EXPECT_THROW(load_graph(::testing::TempDir() + "missing-file"), std::runtime_error);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST(CollectionJson, RoundTrips) {
    SignatureCollection c;
    c.q = 2;
    c.members = {{{0, 1}, {0, 2}}, {{1, 2}, {1, 3}}};
    c.c_bound = Rational(3, 2);
    const auto j = to_json(c);
    EXPECT_EQ(j["c_bound"], "3/2");
    const auto back = collection_from_json(j);
    EXPECT_EQ(back.q, 2);
    EXPECT_EQ(back.members, c.members);
    EXPECT_EQ(*back.c_bound, Rational(3, 2));
    EXPECT_THROW(collection_from_json(nlohmann::json::parse(R"({"members":[]})")), ParseError);
}

TEST(Rational, ArithmeticAndParsing) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(-1, -3).str(), "1/3");
    EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
    EXPECT_EQ(Rational::parse("5"), Rational(5));
    EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(3, 5), 0);
}

TEST(FamilySpec, ParsesGrammar) {
    const auto f = parse_family("joincliques:r=3,w=1,t=40");
    EXPECT_EQ(f.name, "joincliques");
    EXPECT_EQ(f.param("t"), 40);
    EXPECT_EQ(family_graph(f).order(), 2 + 80);
    EXPECT_EQ(parse_family("lt:r=4,t=10").str(), "lt:r=4,t=10");
    EXPECT_EQ(family_graph(parse_family("kbip:r=3,s=100")).size(), 300);
    EXPECT_EQ(family_graph(parse_family("graph:K3,3")).size(), 9);
    EXPECT_THROW(parse_family("nosuch:r=1"), ParseError);
    EXPECT_THROW(parse_family("joincliques:r=3,w"), ParseError);
    EXPECT_THROW(parse_family("graph:Q7"), ParseError);
    EXPECT_THROW(parse_family("kbip:r=3").param("s"), std::invalid_argument);
}

TEST(FamilySpec, InstanceIsPaddedToN) {
    const Graph g = family_instance(parse_family("joincliques:r=3,w=1"), 201);
    EXPECT_EQ(g.order(), 201);
    EXPECT_EQ(g.size(), 5 * 99 + 1 * 0);
    EXPECT_EQ(family_instance(parse_family("kbip:r=2"), 100).size(), 2 * 98);
    EXPECT_THROW(family_instance(parse_family("lt:r=4"), 4), std::invalid_argument);
}
