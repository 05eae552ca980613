// Edge-list text and JSON round trips for graphs.
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "minorperc/graph.hpp"

namespace minorperc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "n m" then m lines "u v" with u < v, LF terminated.
inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: missing header");
    if (n < 0 || m < 0) throw ParseError("edge list: negative header value");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
        if (u < 0 || v >= n || u >= v)
            throw ParseError("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v));
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    std::string rest;
    if (in >> rest) throw ParseError("edge list: trailing data");
    const std::size_t given = edges.size();
    Graph g(static_cast<int>(n), std::move(edges));
    if (static_cast<std::size_t>(g.size()) != given) throw ParseError("edge list: duplicate edge");
    return g;
}

inline nlohmann::json to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph json: need keys n and edges");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0) throw ParseError("graph json: bad n");
    if (!j["edges"].is_array()) throw ParseError("graph json: edges must be an array");
    const int n = j["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("graph json: edge must be [u,v]");
        const long long u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError("graph json: bad edge");
        edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
    }
    return Graph(n, std::move(edges));
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

// JSON when the first non-blank character is '{', edge list otherwise.
inline Graph load_graph(const std::string& path) {
    const std::string text = read_file(path);
    const auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') {
        try {
            return graph_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("graph json: ") + e.what());
        }
    }
    return parse_edge_list(text);
}

}  // namespace minorperc
