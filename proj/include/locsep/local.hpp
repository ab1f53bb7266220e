#ifndef LOCSEP_LOCAL_HPP
#define LOCSEP_LOCAL_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cycles.hpp"
#include "separation.hpp"

namespace locsep {

// An r-local X-walk: a walk inside a short cycle whose first and last vertex
// lie in X and whose interior avoids X, or a single X-edge.
struct XWalk {
    int from;
    int to;
    std::vector<int> vertices;
    std::vector<int> edges;
};

struct LocalComponents {
    VertexSet x;
    EdgeSet boundary;
    std::vector<EdgeSet> classes;
    std::vector<char> tight;
    std::map<int, int> class_of;  // boundary edge -> class index

    int tight_count() const {
        int c = 0;
        for (char t : tight) c += t;
        return c;
    }
};

// Enumeration caps; exceeding one raises CapOverflow.
struct Limits {
    std::size_t cycles = 1000000;
    std::size_t candidates = 10000000;
    std::size_t tstars = 1000000;
    std::size_t branches = 500;
};

// A graph together with its short cycles for a fixed r; caches per-X data.
class LocalGraph {
public:
    LocalGraph(Graph g, int r, Limits limits = {})
        : g_(std::move(g)), r_(r), limits_(limits), cycles_(short_cycles(g_, r, limits.cycles)) {}

    const Graph& graph() const { return g_; }
    int r() const { return r_; }
    const Limits& limits() const { return limits_; }
    const ShortCycleSet& cycles() const { return cycles_; }

    const std::vector<XWalk>& x_walks(const VertexSet& x) const {
        auto it = walk_cache_.find(x);
        if (it != walk_cache_.end()) return it->second;
        return walk_cache_.emplace(x, compute_walks(x)).first->second;
    }

    const LocalComponents& components(const VertexSet& x) const {
        auto it = comp_cache_.find(x);
        if (it != comp_cache_.end()) return it->second;
        return comp_cache_.emplace(x, compute_components(x)).first->second;
    }

    std::vector<VertexSet> atoms(const VertexSet& x) const {
        DisjointSets ds(static_cast<int>(x.size()));
        auto pos = [&](int v) { return static_cast<int>(std::lower_bound(x.begin(), x.end(), v) - x.begin()); };
        for (auto& w : x_walks(x))
            if (w.from != w.to) ds.unite(pos(w.from), pos(w.to));
        std::vector<VertexSet> out;
        for (auto& c : ds.classes()) {
            VertexSet atom;
            for (int i : c) atom.push_back(x[i]);
            out.push_back(atom);
        }
        return out;
    }

    bool r_tomic(const VertexSet& x) const { return !x.empty() && atoms(x).size() == 1; }

private:
    std::vector<XWalk> compute_walks(const VertexSet& x) const {
        std::vector<XWalk> out;
        std::vector<char> in(g_.num_vertices(), 0);
        for (int v : x) in[v] = 1;
        std::set<int> seen;
        for (int v : x)
            for (int ci : cycles_.through[v]) seen.insert(ci);
        for (int ci : seen) {
            const auto& c = cycles_.cycles[ci];
            int len = c.length();
            std::vector<int> pos;
            for (int i = 0; i < len; ++i)
                if (in[c.vertices[i]]) pos.push_back(i);
            int t = static_cast<int>(pos.size());
            for (int p = 0; p < t; ++p) {
                int start = pos[p];
                int stop = pos[(p + 1) % t];
                int steps = (stop - start + len) % len;
                if (steps == 0) steps = len;
                if (steps == 1) continue;  // an X-edge, added below
                XWalk w;
                w.from = c.vertices[start];
                for (int s = 0; s <= steps; ++s) w.vertices.push_back(c.vertices[(start + s) % len]);
                for (int s = 0; s < steps; ++s) w.edges.push_back(c.edges[(start + s) % len]);
                w.to = w.vertices.back();
                XWalk back{w.to, w.from, {w.vertices.rbegin(), w.vertices.rend()}, {w.edges.rbegin(), w.edges.rend()}};
                out.push_back(std::move(w));
                out.push_back(std::move(back));
            }
        }
        for (int e : g_.induced_edges(x)) {
            auto ed = g_.edge(e);
            out.push_back({ed.u, ed.v, {ed.u, ed.v}, {e}});
            out.push_back({ed.v, ed.u, {ed.v, ed.u}, {e}});
        }
        return out;
    }

    LocalComponents compute_components(const VertexSet& x) const {
        LocalComponents lc;
        lc.x = x;
        lc.boundary = g_.boundary(x);
        std::map<int, int> pos;
        for (int i = 0; i < static_cast<int>(lc.boundary.size()); ++i) pos[lc.boundary[i]] = i;
        DisjointSets ds(static_cast<int>(lc.boundary.size()));
        for (auto& w : x_walks(x))
            if (w.edges.size() >= 2) ds.unite(pos.at(w.edges.front()), pos.at(w.edges.back()));
        std::vector<char> in(g_.num_vertices(), 0);
        for (int v : x) in[v] = 1;
        for (auto& c : ds.classes()) {
            EdgeSet cls;
            VertexSet ends;
            for (int i : c) {
                int e = lc.boundary[i];
                cls.push_back(e);
                ends.push_back(in[g_.edge(e).u] ? g_.edge(e).u : g_.edge(e).v);
            }
            lc.tight.push_back(normalized(ends) == x);
            for (int e : cls) lc.class_of[e] = static_cast<int>(lc.classes.size());
            lc.classes.push_back(cls);
        }
        return lc;
    }

    Graph g_;
    int r_;
    Limits limits_;
    ShortCycleSet cycles_;
    mutable std::map<VertexSet, std::vector<XWalk>> walk_cache_;
    mutable std::map<VertexSet, LocalComponents> comp_cache_;
};

inline LocalComponents local_components(const LocalGraph& lg, const VertexSet& x) {
    if (x.empty()) throw PreconditionError("local components need a nonempty separator");
    return lg.components(x);
}

inline bool is_tight_local_separator(const LocalGraph& lg, const VertexSet& x) {
    return !x.empty() && lg.components(x).tight_count() >= 2;
}

inline std::vector<VertexSet> r_toms(const LocalGraph& lg, const VertexSet& x) { return lg.atoms(x); }

// Oriented local separation (E1, X, E2).
struct LocalSeparation {
    VertexSet x;
    EdgeSet e1;
    EdgeSet e2;

    int order() const { return static_cast<int>(x.size()); }
    LocalSeparation inverse() const { return {x, e2, e1}; }
    const EdgeSet& side(int i) const { return i == 0 ? e1 : e2; }

    LocalSeparation canonical() const {
        if (e1.empty() && e2.empty()) return *this;
        if (e1.empty()) return inverse();
        if (e2.empty()) return *this;
        return e1.front() < e2.front() ? *this : inverse();
    }

    bool operator==(const LocalSeparation&) const = default;
    auto operator<=>(const LocalSeparation&) const = default;
};

inline bool is_local_separation(const LocalGraph& lg, const LocalSeparation& s) {
    if (s.x.empty()) return s.e1.empty() && s.e2.empty();
    if (intersects(s.e1, s.e2)) return false;
    auto& lc = lg.components(s.x);
    if (set_union(s.e1, s.e2) != lc.boundary) return false;
    for (auto& c : lc.classes)
        if (!is_subset(c, s.e1) && !is_subset(c, s.e2)) return false;
    return true;
}

inline bool side_has_tight_class(const LocalComponents& lc, const EdgeSet& side) {
    for (std::size_t i = 0; i < lc.classes.size(); ++i)
        if (lc.tight[i] && is_subset(lc.classes[i], side)) return true;
    return false;
}

inline bool is_tight_local(const LocalGraph& lg, const LocalSeparation& s) {
    if (s.x.empty() || !is_local_separation(lg, s)) return false;
    auto& lc = lg.components(s.x);
    return side_has_tight_class(lc, s.e1) && side_has_tight_class(lc, s.e2);
}

// s_r: E_i = E(A_i \ X, X).
inline LocalSeparation induce_local(const Graph& g, const Separation& s) {
    auto x = s.separator();
    return {x, g.edges_between(s.strict_a(), x), g.edges_between(s.strict_b(), x)};
}

// Local separations with separator x (canonical, unoriented).
inline std::vector<LocalSeparation> local_separations_at(const LocalGraph& lg, const VertexSet& x, bool tight_only,
                                                         std::size_t cap = 0) {
    if (cap == 0) cap = lg.limits().candidates;
    auto& lc = lg.components(x);
    int c = static_cast<int>(lc.classes.size());
    if (tight_only && lc.tight_count() < 2) return {};
    if (c > 30 || (std::uint64_t{1} << c) > cap) throw CapOverflow("local separation enumeration cap exceeded");
    std::set<LocalSeparation> out;
    // class 0 stays on side one: every unoriented separation appears once
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); mask += 2) {
        EdgeSet a, b;
        bool ta = false, tb = false;
        for (int i = 0; i < c; ++i) {
            auto& target = ((mask >> i) & 1) ? b : a;
            target.insert(target.end(), lc.classes[i].begin(), lc.classes[i].end());
            (((mask >> i) & 1) ? tb : ta) |= static_cast<bool>(lc.tight[i]);
        }
        if (tight_only && !(ta && tb)) continue;
        out.insert(LocalSeparation{x, normalized(a), normalized(b)}.canonical());
    }
    if (c == 0) out.insert(LocalSeparation{x, {}, {}});
    return {out.begin(), out.end()};
}

inline std::vector<LocalSeparation> enumerate_local_separations(const LocalGraph& lg, int lo, int hi, bool tight_only,
                                                                std::size_t cap = 0) {
    if (cap == 0) cap = lg.limits().candidates;
    const auto& g = lg.graph();
    double candidates = 0, term = 1;
    for (int i = 1; i <= hi; ++i) {
        term = term * (g.num_vertices() - i + 1) / i;
        candidates += term;
    }
    if (candidates > static_cast<double>(cap)) throw CapOverflow("separator candidate cap exceeded");
    std::vector<LocalSeparation> out;
    for_each_subset_up_to(g.num_vertices(), hi, [&](const VertexSet& x) {
        if (x.empty() || static_cast<int>(x.size()) < lo) return;
        auto part = local_separations_at(lg, x, tight_only, cap);
        out.insert(out.end(), part.begin(), part.end());
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<LocalSeparation> enumerate_tight_local_separations(const LocalGraph& lg, int k,
                                                                      std::size_t cap = 0) {
    return enumerate_local_separations(lg, 1, k, true, cap);
}

}  // namespace locsep

#endif
