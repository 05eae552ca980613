// Threshold exponent classification for H-minor-free classes under the four
// monotone properties, and the pedal quantity s_r(H) behind the lower bound.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minorperc/common.hpp"
#include "minorperc/constructions.hpp"
#include "minorperc/cover.hpp"
#include "minorperc/graph.hpp"
#include "minorperc/minor.hpp"

namespace minorperc {

enum class Property { Dr, ChoosableR, ColorableR, NoRRegular };
enum class Tightness { ThetaExponent, LowerBoundOnly, ThetaOne, BoundsPair, Unknown };

inline const char* to_string(Property p) {
    switch (p) {
        case Property::Dr: return "Dr";
        case Property::ChoosableR: return "ChoosableR";
        case Property::ColorableR: return "ColorableR";
        case Property::NoRRegular: return "NoRRegular";
    }
    return "?";
}

inline const char* to_string(Tightness t) {
    switch (t) {
        case Tightness::ThetaExponent: return "ThetaExponent";
        case Tightness::LowerBoundOnly: return "LowerBoundOnly";
        case Tightness::ThetaOne: return "ThetaOne";
        case Tightness::BoundsPair: return "BoundsPair";
        case Tightness::Unknown: return "Unknown";
    }
    return "?";
}

// "degenerate", "choosable", "colorable", "noregular" (CLI names) or the enum names.
inline Property parse_property(const std::string& s) {
    if (s == "degenerate" || s == "Dr") return Property::Dr;
    if (s == "choosable" || s == "ChoosableR") return Property::ChoosableR;
    if (s == "colorable" || s == "ColorableR") return Property::ColorableR;
    if (s == "noregular" || s == "NoRRegular") return Property::NoRRegular;
    throw std::invalid_argument("unknown property '" + s + "'");
}

// Case ids: "case1".."case4" for the numbered statements, "theta1:<reason>",
// "lower" for the pedal lower bound, "inherited:<case>" when borrowed from Dr,
// "bounds:planar", "unknown:<reason>".
struct Classification {
    Property property = Property::Dr;
    int r = 0;
    std::string case_id;
    std::optional<int> q;
    std::optional<std::pair<int, int>> bounds;  // BoundsPair exponents (lower q, upper q)
    Tightness tightness = Tightness::Unknown;
    int tau = 0;
    std::optional<int> w;    // r - tau + 1
    std::optional<int> s_r;  // computed at t_max
    std::optional<int> t_max;
};

inline nlohmann::json to_json(const Classification& c) {
    nlohmann::json j;
    j["property"] = to_string(c.property);
    j["r"] = c.r;
    j["case"] = c.case_id;
    j["q"] = c.q ? nlohmann::json(*c.q) : nlohmann::json(nullptr);
    j["tightness"] = to_string(c.tightness);
    j["tau"] = c.tau;
    j["w"] = c.w ? nlohmann::json(*c.w) : nlohmann::json(nullptr);
    j["s_r"] = c.s_r ? nlohmann::json(*c.s_r) : nlohmann::json(nullptr);
    j["t_max"] = c.t_max ? nlohmann::json(*c.t_max) : nlohmann::json(nullptr);
    if (c.bounds) j["bounds"] = {c.bounds->first, c.bounds->second};
    return j;
}

struct ClassifyOptions {
    std::optional<int> t_max;  // default |V(H)| + |E(H)|
    Budget budget{};           // per minor test
};

inline int default_t_max(const Graph& h) { return h.order() + h.size(); }

// At most one component on >= min_big vertices; every component an isolated
// vertex or a star with maximum degree <= r.
inline bool star_forest_condition(const Graph& h, int r, int min_big) {
    int big = 0;
    for (const auto& comp : components(h)) {
        const int k = static_cast<int>(comp.size());
        if (k >= min_big) ++big;
        if (k == 1) continue;
        int centers = 0;
        for (Vertex v : comp) {
            if (h.degree(v) > r) return false;
            if (h.degree(v) > 1) ++centers;
        }
        int edges = 0;
        for (Vertex v : comp) edges += h.degree(v);
        edges /= 2;
        if (edges != k - 1 || centers > 1) return false;
    }
    return big <= 1;
}

inline bool is_clique_graph(const Graph& h, int k) { return h.order() == k && h.size() == k * (k - 1) / 2; }

inline bool is_star_k1s(const Graph& h, int max_s) {
    const int n = h.order();
    if (n < 2 || h.size() != n - 1 || n - 1 > max_s) return false;
    for (Vertex v = 0; v < n; ++v)
        if (h.degree(v) == n - 1) return true;
    return false;
}

inline int shape_q(int r, int b) { return b * r - static_cast<int>(binomial(b, 2)); }

struct SrResult {
    std::optional<int> s;  // empty when a minor test ran out of budget
    int partial = 0;       // largest s established before stopping
    int t_max = 0;
    std::optional<int> failing_type;
    std::uint64_t pedals_tested = 0;
};

// Pedal F passes when H is a minor of F ^_{t_max} heart.
inline Verdict pedal_passes(const PedalGraph& p, const Graph& h, int t_max, Budget budget) {
    const auto exact = wedge_family_minor(p.graph, p.heart(), h, budget);
    if (exact.verdict == Verdict::no) return Verdict::no;
    if (exact.verdict == Verdict::yes && exact.copies <= t_max) return Verdict::yes;
    // Either undecided or the certificate needs more copies than t_max.
    const Graph host = wedge(p.graph, p.heart(), t_max).graph;
    return contains_minor(host, h, budget).verdict;
}

inline SrResult s_r_detail(const Graph& h, int r, int t_max, Budget budget = {}) {
    if (r < 2) throw std::invalid_argument("s_r needs r >= 2");
    if (t_max < 1) throw std::invalid_argument("t_max must be positive");
    const int t = tau(h).tau;
    if (t < 1) throw std::invalid_argument("s_r needs tau(H) >= 1");
    SrResult out;
    out.t_max = t_max;
    const int cap = static_cast<int>(binomial(r + 1, 2));
    out.partial = r - 1;
    for (int s = r; s <= cap; ++s) {
        for (const auto& p : enumerate_pedals(t - 1, r, s)) {
            ++out.pedals_tested;
            const Verdict v = pedal_passes(p, h, t_max, budget);
            if (v == Verdict::undecided) return out;
            if (v == Verdict::no) {
                out.failing_type = s;
                out.s = s - 1;
                return out;
            }
        }
        out.partial = s;
    }
    out.s = cap;
    return out;
}

inline int s_r(const Graph& h, int r, int t_max, Budget budget = {}) {
    const auto res = s_r_detail(h, r, t_max, budget);
    if (!res.s) throw std::runtime_error("s_r: minor test budget exhausted");
    return *res.s;
}

inline Classification base_report(Property p, int r, int t) {
    Classification c;
    c.property = p;
    c.r = r;
    c.tau = t;
    if (t >= 1 && t <= r + 1) c.w = r - t + 1;
    return c;
}

inline Classification theta_one(Classification c, const std::string& reason) {
    c.case_id = "theta1:" + reason;
    c.tightness = Tightness::ThetaOne;
    return c;
}

inline Classification with_q(Classification c, const std::string& id, int q, Tightness tight) {
    c.case_id = id;
    c.q = q;
    c.tightness = tight;
    return c;
}

// Lower bound for H in H_r with 2 <= tau(H) <= r.
inline Classification classify_lower(int r, const Graph& h, const ClassifyOptions& opt = {}) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    const int t = tau(h).tau;
    if (t < 2 || t > r || !in_Hr(h, r)) throw std::invalid_argument("classify_lower needs H in H_r with 2 <= tau(H) <= r");
    Classification c = base_report(Property::Dr, r, t);
    const int tm = opt.t_max.value_or(default_t_max(h));
    c.t_max = tm;
    const auto sr = s_r_detail(h, r, tm, opt.budget);
    if (!sr.s) {
        c.case_id = "unknown:budget";
        c.s_r = sr.partial;
        c.tightness = Tightness::Unknown;
        return c;
    }
    c.s_r = *sr.s;
    const int cap = static_cast<int>(binomial(r + 1, 2));
    const int q = std::max(std::min(*sr.s + 1, cap), shape_q(r, r - t + 2));
    return with_q(c, "lower", q, Tightness::LowerBoundOnly);
}

inline Classification classify_Dr(int r, const Graph& h, const ClassifyOptions& opt = {}) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    const int t = tau(h).tau;
    const int delta = h.order() ? h.min_degree() : 0;
    Classification c = base_report(Property::Dr, r, t);
    if (t == 0) return theta_one(c, "edgeless");
    if (r <= 3 && is_clique_graph(h, r + 1)) return theta_one(c, "clique");
    if (star_forest_condition(h, r, 2)) return theta_one(c, "stars");
    if (t >= r + 1) return with_q(c, "case1", r, Tightness::ThetaExponent);
    if (delta >= r) {
        if (t != r) throw std::logic_error("tau <= r and min degree >= r force tau = r");
        if (!subgraph_of_cover_shape(h, r - 1, 2)) return with_q(c, "case3", 2 * r - 1, Tightness::ThetaExponent);
        if (!is_clique_graph(h, 2) && !is_clique_graph(h, 3) && !is_clique_graph(h, 4))
            return with_q(c, "case4", 3 * r - 3, Tightness::ThetaExponent);
    }
    if (!subgraph_of_cover_shape(h, t - 1, r + 2 - t)) return with_q(c, "case2", shape_q(r, r + 2 - t), Tightness::ThetaExponent);
    // H in H_r from here on.
    if (t == 1) return theta_one(c, "tau1");
    Classification low = classify_lower(r, h, opt);
    low.property = Property::Dr;
    low.w = c.w;
    return low;
}

inline Classification inherit(Classification base, const Classification& dr) {
    base.s_r = dr.s_r;
    base.t_max = dr.t_max;
    switch (dr.tightness) {
        case Tightness::ThetaOne: return theta_one(base, "inherited");
        case Tightness::ThetaExponent:
        case Tightness::LowerBoundOnly:
            return with_q(base, "inherited:" + dr.case_id, *dr.q, Tightness::LowerBoundOnly);
        default:
            base.case_id = "unknown:" + dr.case_id;
            base.tightness = Tightness::Unknown;
            return base;
    }
}

inline Classification classify_Rr(int r, const Graph& h, const ClassifyOptions& opt = {}) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    const int t = tau(h).tau;
    const int delta = h.order() ? h.min_degree() : 0;
    Classification c = base_report(Property::NoRRegular, r, t);
    if (t == 0) return theta_one(c, "edgeless");
    if (r <= 3 && is_clique_graph(h, r + 1)) return theta_one(c, "clique");
    if (is_star_k1s(h, r)) return theta_one(c, "star");
    if (t >= r + 1) return with_q(c, "case1", r, Tightness::ThetaExponent);
    const int b = r + 2 - t;
    if (r % b == 0 && !subgraph_of_cover_shape(h, t - 1, b)) return with_q(c, "case2", shape_q(r, b), Tightness::ThetaExponent);
    if (r % 2 == 0 && delta >= r && !subgraph_of_cover_shape(h, r - 1, 2))
        return with_q(c, "case3", 2 * r - 1, Tightness::ThetaExponent);
    return inherit(c, classify_Dr(r, h, opt));
}

inline Classification classify_chi(int r, const Graph& h, const ClassifyOptions& opt = {}) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    const int t = tau(h).tau;
    Classification c = base_report(Property::ColorableR, r, t);
    if (t == 0) return theta_one(c, "edgeless");
    if (r <= 3 && is_clique_graph(h, r + 1)) return theta_one(c, "clique");
    if (star_forest_condition(h, r, 3)) return theta_one(c, "stars");
    if (r == 3 && h.order() == 6 && h.size() == 9 && isomorphic(h, complete_bipartite(3, 3))) {
        c.case_id = "bounds:planar";
        c.bounds = {5, 6};
        c.tightness = Tightness::BoundsPair;
        return c;
    }
    if (t <= 2 && !subgraph_of_cover_shape(h, 1, r)) return with_q(c, "case1", r * (r + 1) / 2, Tightness::ThetaExponent);
    return inherit(c, classify_Dr(r, h, opt));
}

inline Classification classify(Property p, int r, const Graph& h, const ClassifyOptions& opt = {}) {
    switch (p) {
        case Property::Dr: return classify_Dr(r, h, opt);
        case Property::ChoosableR: {
            Classification c = classify_Dr(r, h, opt);
            c.property = Property::ChoosableR;
            return c;
        }
        case Property::ColorableR: return classify_chi(r, h, opt);
        case Property::NoRRegular: return classify_Rr(r, h, opt);
    }
    throw std::invalid_argument("unknown property");
}

}  // namespace minorperc
