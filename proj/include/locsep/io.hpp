#ifndef LOCSEP_IO_HPP
#define LOCSEP_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "covering.hpp"
#include "decomposition.hpp"
#include "verify.hpp"

namespace locsep {

using Json = nlohmann::ordered_json;

inline Json vertices_json(const Graph& g, const VertexSet& x) {
    Json out = Json::array();
    for (int v : x) out.push_back(g.name(v));
    return out;
}

inline Json edges_json(const Graph& g, const EdgeSet& f) {
    Json out = Json::array();
    for (int e : f) out.push_back({g.name(g.edge(e).u), g.name(g.edge(e).v)});
    return out;
}

inline Json separation_json(const Graph& g, const LocalSeparation& s) {
    return {{"X", vertices_json(g, s.x)}, {"E1", edges_json(g, s.e1)}, {"E2", edges_json(g, s.e2)}};
}

inline Json separations_json(const Graph& g, const std::vector<LocalSeparation>& list) {
    Json out = Json::array();
    for (auto& s : list) out.push_back(separation_json(g, s));
    return out;
}

inline Json decomposition_json(const Graph& g, const GraphDecomposition& d) {
    Json nodes = Json::array();
    for (auto& n : d.nodes)
        nodes.push_back({{"id", n.id},
                         {"part", {{"vertices", vertices_json(g, n.part.vertices)}, {"edges", edges_json(g, n.part.edges)}}},
                         {"members", separations_json(g, n.members)}});
    Json edges = Json::array();
    for (auto& e : d.edges)
        edges.push_back({{"id", e.id}, {"u", d.nodes[e.u].id}, {"v", d.nodes[e.v].id}, {"separation", separation_json(g, e.label)}});
    Json meta = {{"r", d.r}, {"k", d.k}, {"beyond_guarantee", d.beyond_guarantee}, {"valid", d.valid}};
    meta["violated_axiom"] = d.valid ? Json(nullptr) : Json(d.violated_axiom);
    meta["witness"] = d.valid ? Json(nullptr) : Json(d.witness);
    return {{"nodes", nodes}, {"edges", edges}, {"meta", meta}};
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

// Parallel edges and loops are kept, so the graph is not declared strict.
inline std::string decomposition_dot(const Graph& g, const GraphDecomposition& d) {
    std::ostringstream out;
    out << "graph H {\n";
    for (auto& n : d.nodes) {
        auto label = g.describe(n.part.vertices);
        out << "  " << detail::dot_quote(n.id) << " [label=" << detail::dot_quote(label)
            << ", tooltip=" << detail::dot_quote(g.describe_edges(n.part.edges)) << "];\n";
    }
    for (auto& e : d.edges)
        out << "  " << detail::dot_quote(d.nodes[e.u].id) << " -- " << detail::dot_quote(d.nodes[e.v].id)
            << " [label=" << detail::dot_quote(g.describe(e.label.x)) << ", id=" << detail::dot_quote(e.id) << "];\n";
    out << "}\n";
    return out.str();
}

inline Json nested_set_json(const Graph& g, const NestedSet<LocalSeparation>& n) {
    Json out = Json::array();
    for (auto& level : n.levels) out.push_back({{"k", level.k}, {"separations", separations_json(g, level.members)}});
    return out;
}

inline Json local_separators_json(const LocalGraph& lg, int k) {
    std::set<VertexSet> seen;
    for (auto& s : enumerate_tight_local_separations(lg, k)) seen.insert(s.x);
    Json out = Json::array();
    for (auto& x : seen) out.push_back(vertices_json(lg.graph(), x));
    return out;
}

inline Json minimal_bottlenecks_json(const LocalGraph& lg, int kmax) {
    Json out = Json::array();
    for (int k = 1; k <= kmax; ++k) {
        auto found = minimal_local_bottlenecks(lg, k, lg.limits().branches);
        Json list = Json::array();
        for (auto& beta : found.bottlenecks) list.push_back(separations_json(lg.graph(), beta));
        out.push_back({{"k", k}, {"partial", found.partial}, {"bottlenecks", list}});
    }
    return out;
}

inline Json displacement_json(const Displacement& d) {
    Json value = d.value == kInfinity ? Json("infinity") : Json(d.value);
    return {{"value", value}, {"mode", d.exact ? "exact" : "lower_bound"}};
}

// Window as an edge list over lift names.
inline std::string window_edge_list(const CoverWindow& w) {
    std::ostringstream out;
    for (int e = 0; e < w.cover.num_edges(); ++e)
        out << w.cover.name(w.cover.edge(e).u) << ' ' << w.cover.name(w.cover.edge(e).v) << '\n';
    return out.str();
}

inline Json fibre_json(const Graph& g, const CoverWindow& w) {
    Json out = Json::array();
    for (int v = 0; v < w.size(); ++v)
        out.push_back({{"vertex", w.cover.name(v)}, {"fibre", g.name(w.proj[v])}, {"depth", w.depth[v]}});
    return out;
}

inline std::string suite_status(const SuiteResult& s) {
    if (!s.applicable) return s.passed ? "skipped" : "inconclusive";
    return s.passed ? "pass" : "fail";
}

inline Json verify_json(const std::vector<SuiteResult>& results) {
    Json suites = Json::array();
    bool ok = true;
    for (auto& s : results) {
        ok = ok && (s.passed || !s.applicable);  // an insufficient window is reported, not failed
        suites.push_back({{"name", s.name}, {"status", suite_status(s)}, {"checks", s.checks}, {"detail", s.detail}});
    }
    return {{"passed", ok}, {"suites", suites}};
}

inline std::string edge_list_text(const Graph& g) {
    std::ostringstream out;
    for (int e = 0; e < g.num_edges(); ++e) out << g.name(g.edge(e).u) << ' ' << g.name(g.edge(e).v) << '\n';
    return out.str();
}

}  // namespace locsep

#endif
