// io.hpp - JSON/DOT/CSV serialization for graphs, embeddings, verdicts and
// report rows
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wirelab/embedding.hpp"
#include "wirelab/families.hpp"
#include "wirelab/graph.hpp"
#include "wirelab/isoperimetric.hpp"

namespace wirelab {

// {"n": int, "edges": [[u,v],...], "family": string}; edges come out sorted
// because the graph stores them canonically.
inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", edges}, {"family", to_string(g.family())}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    Family family = j.contains("family") ? family_from_string(j.at("family").get<std::string>())
                                         : Family::generic;
    return Graph(j.at("n").get<int>(), std::move(edges), family);
}

namespace detail {

// Human-readable coordinate annotation for families that carry one.
inline std::string vertex_coordinate(const Graph& g, int v) {
    const auto& p = g.family_params();
    switch (g.family()) {
        case Family::hypercube:
        case Family::folded_hypercube:
            if (p.size() == 1) return bit_string(static_cast<std::uint32_t>(v), p[0]);
            break;
        case Family::cycle_of_ladders:
            if (p.size() == 2) {
                ColCoordinates c = col_coordinates(v, p[0], p[1]);
                return "L" + std::to_string(c.ladder) + ".b" + std::to_string(c.band) + ".r" +
                       std::to_string(c.rung);
            }
            break;
        case Family::star_of_cycle:
            if (p.size() == 2) {
                StarOfCycleCoordinates c = star_coordinates(v, p[0], p[1]);
                return c.central ? "c" + std::to_string(c.cycle)
                                 : "o" + std::to_string(c.cycle) + ".p" + std::to_string(c.position);
            }
            break;
        default:
            break;
    }
    return {};
}

}  // namespace detail

// Undirected DOT with integer vertex labels; families with coordinate views
// annotate each vertex with a coord attribute.
inline std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph \"" << to_string(g.family()) << "\" {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::string coord = detail::vertex_coordinate(g, v);
        out << "  " << v;
        if (!coord.empty()) out << " [coord=\"" << coord << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

// {"map": [host label per guest label], "routes": [[host labels]...]};
// routes follow guest.edges() order.
inline nlohmann::json embedding_to_json(const Embedding& e) {
    return {{"map", e.vertex_map}, {"routes", e.routes}};
}

inline nlohmann::json verdict_to_json(const CutVerdict& v) {
    nlohmann::json sides = nlohmann::json::array();
    for (const auto& side : v.sides)
        sides.push_back({{"size", side.size},
                         {"induced", side.induced},
                         {"expected_induced", side.expected_induced},
                         {"certificate", to_string(side.certificate)},
                         {"optimal", side.optimal}});
    nlohmann::json out{{"cut", v.cut_tag},
                       {"routes_internal_ok", v.routes_internal_ok},
                       {"routes_crossing_ok", v.routes_crossing_ok},
                       {"sides_optimal", v.sides_optimal},
                       {"congestion_identity_ok", v.congestion_identity_ok},
                       {"congestion", v.congestion},
                       {"expected_congestion", v.expected_congestion},
                       {"sides", sides},
                       {"passed", v.passed()}};
    if (v.witness_guest_edge)
        out["witness_guest_edge"] = {v.witness_guest_edge->first, v.witness_guest_edge->second};
    return out;
}

// One row of the embedding report. wl_formula carries the closed-form value;
// formula_agrees compares it against the measured wirelength and
// formula_suspect marks values computed with floored arguments.
struct ReportRow {
    std::string algorithm;   // "A" or "B"
    std::string parameters;  // "s=4" or "n=20,j=2,k=4,m=4"
    long long wl_distance = 0;
    long long wl_cuts = 0;
    long long wl_formula = 0;
    bool formula_suspect = false;
    bool formula_agrees = false;
    std::optional<long long> wl_oracle;
    bool all_cuts_verified = false;
    std::string certificates;  // e.g. "exhaustive:8" or "exhaustive:12,lex-segment-formula:4"
};

inline const char* report_csv_header() {
    return "algorithm,parameters,wl_distance,wl_cuts,wl_formula,formula_suspect,formula_agrees,"
           "wl_oracle,all_cuts_verified,certificates";
}

inline std::string report_csv_row(const ReportRow& r) {
    std::ostringstream out;
    out << r.algorithm << ",\"" << r.parameters << "\"," << r.wl_distance << ',' << r.wl_cuts << ','
        << r.wl_formula << ',' << (r.formula_suspect ? "true" : "false") << ','
        << (r.formula_agrees ? "true" : "false") << ',';
    if (r.wl_oracle) out << *r.wl_oracle;
    out << ',' << (r.all_cuts_verified ? "true" : "false") << ",\"" << r.certificates << '"';
    return out.str();
}

inline std::string report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << report_csv_header() << '\n';
    for (const auto& r : rows) out << report_csv_row(r) << '\n';
    return out.str();
}

inline nlohmann::json report_row_json(const ReportRow& r) {
    nlohmann::json out{{"algorithm", r.algorithm},
                       {"parameters", r.parameters},
                       {"wl_distance", r.wl_distance},
                       {"wl_cuts", r.wl_cuts},
                       {"wl_formula", r.wl_formula},
                       {"formula_suspect", r.formula_suspect},
                       {"formula_agrees", r.formula_agrees},
                       {"all_cuts_verified", r.all_cuts_verified},
                       {"certificates", r.certificates}};
    if (r.wl_oracle) out["wl_oracle"] = *r.wl_oracle;
    return out;
}

inline nlohmann::json report_json(const std::vector<ReportRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) out.push_back(report_row_json(r));
    return out;
}

// Profile export: one CSV row per (family, n, a) with both witnesses.
inline const char* profile_csv_header() { return "family,n,a,i_value,theta_value,witness_i,witness_theta"; }

inline std::string profile_csv_row(const Graph& g, const IsoperimetricProfile& p) {
    auto join = [](const std::vector<int>& xs) {
        std::ostringstream s;
        for (std::size_t t = 0; t < xs.size(); ++t) s << (t ? " " : "") << xs[t];
        return s.str();
    };
    std::ostringstream out;
    out << to_string(g.family()) << ',' << g.vertex_count() << ',' << p.size << ',' << p.i_value
        << ',' << p.theta_value << ",\"" << join(p.witness_i) << "\",\"" << join(p.witness_theta)
        << '"';
    return out.str();
}

}  // namespace wirelab
