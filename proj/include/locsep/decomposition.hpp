#ifndef LOCSEP_DECOMPOSITION_HPP
#define LOCSEP_DECOMPOSITION_HPP

#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "local_structure.hpp"
#include "local_tstar.hpp"
#include "tstar.hpp"

namespace locsep {

struct Part {
    VertexSet vertices;
    EdgeSet edges;
    bool operator==(const Part&) const = default;
    auto operator<=>(const Part&) const = default;
};

struct DecompositionNode {
    std::string id;
    std::vector<LocalSeparation> members;  // oriented, sorted
    Part part;
};

// An edge joins the node holding `label` (u) to the node holding its inverse (v).
struct DecompositionEdge {
    std::string id;
    int u = 0;
    int v = 0;
    LocalSeparation label;
};

struct GraphDecomposition {
    std::vector<DecompositionNode> nodes;
    std::vector<DecompositionEdge> edges;
    int r = 0;
    int k = 0;
    bool beyond_guarantee = false;
    bool valid = true;
    std::string violated_axiom;
    std::string witness;
};

inline std::string describe(const Graph& g, const LocalSeparation& s) {
    return g.describe_edges(s.e1) + "|" + g.describe(s.x) + "|" + g.describe_edges(s.e2);
}

inline std::string stable_id(char prefix, const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%c%016llx", prefix, static_cast<unsigned long long>(h));
    return buf;
}

// Orientations of a nested set with a strict order on separator-sharing pairs.
// Index 2i and 2i+1 are the two orientations of the i-th separation.
struct OrientedFamily {
    std::vector<LocalSeparation> seps;
    std::vector<std::vector<char>> greater;  // greater[a][b]: seps[a] strictly above seps[b]

    int size() const { return static_cast<int>(seps.size()); }
    static int inverse(int i) { return i ^ 1; }
};

inline OrientedFamily local_family(const LocalGraph& lg, const std::vector<LocalSeparation>& n) {
    OrientedFamily f;
    for (auto& s : n) {
        f.seps.push_back(s.canonical());
        f.seps.push_back(s.canonical().inverse());
    }
    int m = f.size();
    f.greater.assign(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && intersects(f.seps[a].x, f.seps[b].x)) f.greater[a][b] = local_succ(lg, f.seps[a], f.seps[b]);
    return f;
}

inline OrientedFamily global_family(const Graph& g, const std::vector<Separation>& n) {
    OrientedFamily f;
    std::vector<Separation> raw;
    for (auto& s : n) {
        raw.push_back(s.canonical());
        raw.push_back(s.canonical().inverse());
    }
    for (auto& s : raw) f.seps.push_back(induce_local(g, s));
    int m = f.size();
    f.greater.assign(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && raw[a] != raw[b]) f.greater[a][b] = geq(raw[a], raw[b]);
    return f;
}

// R(s) minus R(s') for every s' below s whose separator meets that of s.
inline EdgeSet restricted_right_side(const OrientedFamily& f, int i) {
    EdgeSet out = f.seps[i].e2;
    for (int j = 0; j < f.size(); ++j)
        if (j != i && f.greater[i][j] && intersects(f.seps[i].x, f.seps[j].x))
            out = set_difference(out, f.seps[j].e2);
    return out;
}

struct CutoutData {
    std::vector<EdgeSet> restricted;            // R_N per orientation
    std::vector<VertexSet> free_components;     // components of G minus all separators
    std::vector<std::vector<int>> classes;      // cutouts as orientation indices
    std::vector<int> class_of;
};

inline bool separator_sharing_vx(const OrientedFamily& f, int a, int b) {
    int bi = OrientedFamily::inverse(b);
    if (!f.greater[a][bi]) return false;
    for (int v : set_intersection(f.seps[a].x, f.seps[b].x)) {
        bool between = false;
        for (int c = 0; c < f.size() && !between; ++c)
            if (c != a && c != bi && contains(f.seps[c].x, v) && f.greater[a][c] && f.greater[c][bi]) between = true;
        if (!between) return true;
    }
    return false;
}

inline CutoutData compute_cutouts(const Graph& g, const OrientedFamily& f) {
    CutoutData d;
    int m = f.size();
    for (int i = 0; i < m; ++i) d.restricted.push_back(restricted_right_side(f, i));
    VertexSet all_x;
    for (auto& s : f.seps) all_x = set_union(all_x, s.x);
    d.free_components = g.components(all_x);
    DisjointSets ds(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (intersects(f.seps[a].x, f.seps[b].x) && (separator_sharing_vx(f, a, b) || separator_sharing_vx(f, b, a)))
                ds.unite(a, b);
    for (auto& comp : d.free_components) {
        auto cut = g.boundary(comp);
        int first = -1;
        for (int i = 0; i < m; ++i)
            if (intersects(cut, d.restricted[i])) {
                if (first < 0) first = i;
                else ds.unite(first, i);
            }
    }
    std::vector<int> all_x_mask(g.num_vertices(), 0);
    for (int v : all_x) all_x_mask[v] = 1;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto ed = g.edge(e);
        if (!all_x_mask[ed.u] || !all_x_mask[ed.v]) continue;
        bool inside_one = false;
        for (auto& s : f.seps)
            if (contains(s.x, ed.u) && contains(s.x, ed.v)) inside_one = true;
        if (inside_one) continue;
        int first = -1;
        for (int i = 0; i < m; ++i)
            if (contains(d.restricted[i], e)) {
                if (first < 0) first = i;
                else ds.unite(first, i);
            }
    }
    d.classes = ds.classes();
    d.class_of.assign(m, -1);
    for (int c = 0; c < static_cast<int>(d.classes.size()); ++c)
        for (int i : d.classes[c]) d.class_of[i] = c;
    return d;
}

inline Part cutout_part(const Graph& g, const OrientedFamily& f, const CutoutData& d, const std::vector<int>& cls) {
    Part p;
    for (int i : cls) {
        const auto& s = f.seps[i];
        p.vertices = set_union(p.vertices, s.x);
        p.edges = set_union(p.edges, g.induced_edges(s.x));
        p.edges = set_union(p.edges, d.restricted[i]);
        for (int e : d.restricted[i]) p.vertices = set_union(p.vertices, normalized({g.edge(e).u, g.edge(e).v}));
    }
    for (auto& comp : d.free_components) {
        auto cut = g.boundary(comp);
        bool touches = false;
        for (int i : cls) touches = touches || intersects(cut, d.restricted[i]);
        if (!touches) continue;
        p.vertices = set_union(p.vertices, comp);
        p.edges = set_union(p.edges, g.induced_edges(comp));
    }
    return p;
}

inline GraphDecomposition trivial_decomposition(const Graph& g) {
    GraphDecomposition d;
    d.nodes.push_back({stable_id('n', ""), {}, {g.all_vertices(), g.all_edges()}});
    return d;
}

// Sorts nodes by their members and assigns stable ids.
inline void finalize(const Graph& g, GraphDecomposition& d) {
    for (auto& n : d.nodes) std::sort(n.members.begin(), n.members.end());
    std::vector<int> order(d.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tie(d.nodes[a].members, d.nodes[a].part) < std::tie(d.nodes[b].members, d.nodes[b].part);
    });
    std::vector<int> where(order.size());
    std::vector<DecompositionNode> nodes;
    for (std::size_t i = 0; i < order.size(); ++i) {
        where[order[i]] = static_cast<int>(i);
        nodes.push_back(std::move(d.nodes[order[i]]));
    }
    d.nodes = std::move(nodes);
    for (auto& n : d.nodes) {
        std::string key;
        for (auto& s : n.members) key += describe(g, s) + ";";
        n.id = stable_id('n', key);
    }
    for (auto& e : d.edges) {
        e.u = where[e.u];
        e.v = where[e.v];
        e.id = stable_id('e', describe(g, e.label));
    }
    std::sort(d.edges.begin(), d.edges.end(), [](auto& a, auto& b) { return a.label < b.label; });
}

inline GraphDecomposition decomposition_from_family(const Graph& g, const OrientedFamily& f) {
    if (f.seps.empty()) return trivial_decomposition(g);
    auto data = compute_cutouts(g, f);
    GraphDecomposition d;
    for (auto& cls : data.classes) {
        DecompositionNode node;
        for (int i : cls) node.members.push_back(f.seps[i]);
        node.part = cutout_part(g, f, data, cls);
        d.nodes.push_back(std::move(node));
    }
    for (int i = 0; i < f.size(); i += 2)
        d.edges.push_back({"", data.class_of[i], data.class_of[i + 1], f.seps[i]});
    finalize(g, d);
    return d;
}

// Cutouts of a nested set of local separations, as member lists.
inline std::vector<std::vector<LocalSeparation>> cutouts(const LocalGraph& lg, const std::vector<LocalSeparation>& n) {
    auto f = local_family(lg, n);
    auto data = compute_cutouts(lg.graph(), f);
    std::vector<std::vector<LocalSeparation>> out;
    for (auto& cls : data.classes) {
        std::vector<LocalSeparation> members;
        for (int i : cls) members.push_back(f.seps[i]);
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline GraphDecomposition build_decomposition(const LocalGraph& lg, const std::vector<LocalSeparation>& n) {
    auto d = decomposition_from_family(lg.graph(), local_family(lg, n));
    d.r = lg.r();
    return d;
}

// Cutout construction with the global order; labels are the induced local separations.
inline GraphDecomposition build_decomposition_global(const Graph& g, const std::vector<Separation>& n) {
    return decomposition_from_family(g, global_family(g, n));
}

// Splitting stars of a nested set of proper separations; parts are the interiors.
inline GraphDecomposition tree_decomposition(const Graph& g, const std::vector<Separation>& n) {
    if (n.empty()) return trivial_decomposition(g);
    std::vector<Separation> o;
    for (auto& s : n) {
        if (!s.proper()) throw PreconditionError("tree decomposition needs proper separations");
        o.push_back(s.canonical());
        o.push_back(s.canonical().inverse());
    }
    int m = static_cast<int>(o.size());
    auto gt = [&](int a, int b) { return o[a] != o[b] && geq(o[a], o[b]); };
    DisjointSets ds(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int bi = b ^ 1;
            if (a == b || a == bi || !gt(a, bi)) continue;
            bool between = false;
            for (int c = 0; c < m && !between; ++c)
                if (gt(a, c) && gt(c, bi)) between = true;
            if (!between) ds.unite(a, b);
        }
    auto classes = ds.classes();
    std::vector<int> class_of(m);
    GraphDecomposition d;
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        DecompositionNode node;
        VertexSet inner = g.all_vertices();
        for (int i : classes[c]) {
            class_of[i] = c;
            node.members.push_back(induce_local(g, o[i]));
            inner = set_intersection(inner, o[i].b);
        }
        node.part = {inner, g.induced_edges(inner)};
        d.nodes.push_back(std::move(node));
    }
    for (int i = 0; i < m; i += 2) d.edges.push_back({"", class_of[i], class_of[i + 1], induce_local(g, o[i])});
    finalize(g, d);
    return d;
}

struct ValidationReport {
    bool ok = true;
    std::string axiom;
    std::string witness;
};

inline ValidationReport validate_decomposition(const Graph& g, const GraphDecomposition& d) {
    VertexSet vs;
    EdgeSet es;
    for (auto& n : d.nodes) {
        vs = set_union(vs, n.part.vertices);
        es = set_union(es, n.part.edges);
    }
    for (int v : g.all_vertices())
        if (!contains(vs, v)) return {false, "H1", g.name(v)};
    for (int e : g.all_edges())
        if (!contains(es, e)) return {false, "H1", g.edge_name(e)};
    int m = static_cast<int>(d.nodes.size());
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<char> host(m, 0);
        int count = 0;
        for (int h = 0; h < m; ++h)
            if (contains(d.nodes[h].part.vertices, v)) host[h] = 1, ++count;
        DisjointSets ds(m);
        for (auto& e : d.edges)
            if (host[e.u] && host[e.v]) ds.unite(e.u, e.v);
        int roots = 0;
        for (int h = 0; h < m; ++h)
            if (host[h] && ds.find(h) == h) ++roots;
        if (count > 0 && roots != 1) return {false, "H2", g.name(v)};
    }
    return {};
}

inline void require_valid(const Graph& g, const GraphDecomposition& d) {
    auto rep = validate_decomposition(g, d);
    if (!rep.ok) throw ValidationError(rep.axiom, rep.witness);
}

// Contracts the edges whose labels lie in `labels`; their orientations leave the node members.
inline GraphDecomposition contract(const Graph& g, const GraphDecomposition& d,
                                   const std::vector<LocalSeparation>& labels) {
    std::set<LocalSeparation> drop;
    for (auto& s : labels) {
        bool known = false;
        for (auto& e : d.edges) known = known || e.label == s.canonical();
        if (!known) throw PreconditionError("unknown edge label " + describe(g, s));
        drop.insert(s.canonical());
    }
    int m = static_cast<int>(d.nodes.size());
    DisjointSets ds(m);
    for (auto& e : d.edges)
        if (drop.count(e.label)) ds.unite(e.u, e.v);
    auto classes = ds.classes();
    if (classes.size() == 1 && drop.size() == d.edges.size()) {
        auto out = trivial_decomposition(g);
        out.r = d.r, out.k = d.k, out.beyond_guarantee = d.beyond_guarantee;
        return out;
    }
    std::vector<int> where(m);
    GraphDecomposition out;
    out.r = d.r, out.k = d.k, out.beyond_guarantee = d.beyond_guarantee;
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        DecompositionNode node;
        for (int h : classes[c]) {
            where[h] = c;
            for (auto& s : d.nodes[h].members)
                if (!drop.count(s.canonical())) node.members.push_back(s);
            node.part.vertices = set_union(node.part.vertices, d.nodes[h].part.vertices);
            node.part.edges = set_union(node.part.edges, d.nodes[h].part.edges);
        }
        out.nodes.push_back(std::move(node));
    }
    for (auto& e : d.edges)
        if (!drop.count(e.label)) out.edges.push_back({"", where[e.u], where[e.v], e.label});
    finalize(g, out);
    return out;
}

// Equality up to node order, members and ids included.
inline bool same_decomposition(const GraphDecomposition& a, const GraphDecomposition& b) {
    if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
    using Key = std::pair<std::vector<LocalSeparation>, Part>;
    auto key = [](const DecompositionNode& n) { return Key{n.members, n.part}; };
    std::vector<Key> ka, kb;
    for (auto& n : a.nodes) ka.push_back(key(n));
    for (auto& n : b.nodes) kb.push_back(key(n));
    if (ka != kb) return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        auto& x = a.edges[i];
        auto& y = b.edges[i];
        if (!(x.label == y.label) || !(ka[x.u] == kb[y.u]) || !(ka[x.v] == kb[y.v])) return false;
    }
    return true;
}

struct DecomposeResult {
    GraphDecomposition decomposition;
    NestedLocalSet nested;
};

// The full pipeline: nested set of tight local separations, cutouts, parts, validation.
inline DecomposeResult decompose_with_nested(const Graph& g, int r, int kmax, Limits limits = {}) {
    if (!g.connected()) throw PreconditionError("graph must be connected");
    if (r < 0 || kmax < 0) throw PreconditionError("r and k must be nonnegative");
    LocalGraph lg(g, r, limits);
    DecomposeResult res;
    res.nested = nested_set_local(lg, kmax);
    res.decomposition = build_decomposition(lg, res.nested.set.all());
    auto& d = res.decomposition;
    d.r = r;
    d.k = kmax;
    d.beyond_guarantee = res.nested.beyond_guarantee;
    auto rep = validate_decomposition(g, d);
    d.valid = rep.ok;
    d.violated_axiom = rep.axiom;
    d.witness = rep.witness;
    return res;
}

inline GraphDecomposition decompose(const Graph& g, int r, int kmax, Limits limits = {}) {
    return decompose_with_nested(g, r, kmax, limits).decomposition;
}

// Image of a local separation under a vertex map that is an automorphism.
inline LocalSeparation map_local(const Graph& g, const std::vector<int>& phi, const LocalSeparation& s) {
    auto map_edges = [&](const EdgeSet& es) {
        EdgeSet out;
        for (int e : es) out.push_back(g.edge_between(phi[g.edge(e).u], phi[g.edge(e).v]));
        return normalized(out);
    };
    VertexSet x;
    for (int v : s.x) x.push_back(phi[v]);
    return {normalized(x), map_edges(s.e1), map_edges(s.e2)};
}

inline bool is_automorphism(const Graph& g, const std::vector<int>& phi) {
    int n = g.num_vertices();
    if (static_cast<int>(phi.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int v : phi) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    for (auto& e : g.edges())
        if (!g.adjacent(phi[e.u], phi[e.v])) return false;
    return true;
}

// Whether phi permutes labels and nodes of d compatibly with the parts.
inline bool canonicity_check(const Graph& g, const GraphDecomposition& d, const std::vector<int>& phi) {
    if (!is_automorphism(g, phi)) throw PreconditionError("map is not an automorphism");
    auto map_part = [&](const Part& p) {
        Part q;
        for (int v : p.vertices) q.vertices.push_back(phi[v]);
        for (int e : p.edges) q.edges.push_back(g.edge_between(phi[g.edge(e).u], phi[g.edge(e).v]));
        q.vertices = normalized(q.vertices);
        q.edges = normalized(q.edges);
        return q;
    };
    std::map<std::vector<LocalSeparation>, int> by_members;
    for (int h = 0; h < static_cast<int>(d.nodes.size()); ++h) by_members[d.nodes[h].members] = h;
    std::vector<int> node_map(d.nodes.size());
    for (int h = 0; h < static_cast<int>(d.nodes.size()); ++h) {
        std::vector<LocalSeparation> img;
        for (auto& s : d.nodes[h].members) img.push_back(map_local(g, phi, s));
        std::sort(img.begin(), img.end());
        auto it = by_members.find(img);
        if (it == by_members.end()) return false;
        node_map[h] = it->second;
        if (map_part(d.nodes[h].part) != d.nodes[it->second].part) return false;
    }
    std::map<LocalSeparation, int> by_label;
    for (int i = 0; i < static_cast<int>(d.edges.size()); ++i) by_label[d.edges[i].label] = i;
    for (auto& e : d.edges) {
        auto img = map_local(g, phi, e.label);
        bool flipped = !(img == img.canonical());
        auto it = by_label.find(img.canonical());
        if (it == by_label.end()) return false;
        auto& f = d.edges[it->second];
        int u = node_map[e.u], v = node_map[e.v];
        if (flipped) std::swap(u, v);
        if (f.u != u || f.v != v) return false;
    }
    return true;
}

// All automorphisms by backtracking with degree and adjacency pruning.
inline std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t cap = 100000) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> out;
    std::vector<int> phi(n, -1);
    std::vector<char> used(n, 0);
    // order vertices by BFS so that each new vertex has an assigned neighbour when possible
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> queue{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            order.push_back(queue[i]);
            for (auto [w, e] : g.incident(queue[i]))
                if (!seen[w]) seen[w] = 1, queue.push_back(w);
        }
    }
    auto rec = [&](auto&& self, int depth) -> void {
        if (out.size() >= cap) throw CapOverflow("automorphism cap exceeded");
        if (depth == n) {
            out.push_back(phi);
            return;
        }
        int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.degree(w) != g.degree(v)) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                int u = order[i];
                if (g.adjacent(u, v) != g.adjacent(phi[u], w)) ok = false;
            }
            if (!ok) continue;
            phi[v] = w;
            used[w] = 1;
            self(self, depth + 1);
            used[w] = 0;
            phi[v] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace locsep

#endif
