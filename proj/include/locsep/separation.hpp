#ifndef LOCSEP_SEPARATION_HPP
#define LOCSEP_SEPARATION_HPP

#include <array>
#include <set>
#include <vector>

#include "graph.hpp"

namespace locsep {

// Oriented separation (A, B) of a graph.
struct Separation {
    VertexSet a;
    VertexSet b;

    VertexSet separator() const { return set_intersection(a, b); }
    int order() const { return static_cast<int>(separator().size()); }
    Separation inverse() const { return {b, a}; }
    VertexSet strict_a() const { return set_difference(a, b); }
    VertexSet strict_b() const { return set_difference(b, a); }
    bool proper() const { return !strict_a().empty() && !strict_b().empty(); }

    // Representative of the unoriented separation.
    Separation canonical() const { return (b < a) ? inverse() : *this; }

    bool operator==(const Separation&) const = default;
    auto operator<=>(const Separation&) const = default;
};

inline bool is_separation(const Graph& g, const Separation& s) {
    if (set_union(s.a, s.b) != g.all_vertices()) return false;
    return g.edges_between(s.strict_a(), s.strict_b()).empty();
}

// Builds (X + side, V - side) for a union `side` of components of G - X.
inline Separation separation_from_side(const Graph& g, const VertexSet& x, const VertexSet& side) {
    return {set_union(x, side), set_difference(g.all_vertices(), side)};
}

inline bool has_tight_component(const Graph& g, const VertexSet& x, const VertexSet& strict_side) {
    for (auto& c : g.components(set_union(x, set_difference(g.all_vertices(), strict_side)))) {
        if (g.neighbourhood(c) == x) return true;
    }
    return false;
}

inline bool is_tight(const Graph& g, const Separation& s) {
    auto x = s.separator();
    return has_tight_component(g, x, s.strict_a()) && has_tight_component(g, x, s.strict_b());
}

enum class Comparison { geq, leq, equal, incomparable };

// (A,B) >= (C,D) iff A is a subset of C and B a superset of D.
inline bool geq(const Separation& s, const Separation& t) { return is_subset(s.a, t.a) && is_subset(t.b, s.b); }

inline Comparison compare(const Separation& s, const Separation& t) {
    bool ge = geq(s, t), le = geq(t, s);
    if (ge && le) return Comparison::equal;
    if (ge) return Comparison::geq;
    if (le) return Comparison::leq;
    return Comparison::incomparable;
}

inline bool nested_direct(const Separation& s, const Separation& t) {
    auto ti = t.inverse();
    return geq(s, t) || geq(t, s) || geq(s, ti) || geq(ti, s);
}

inline bool cross_global_direct(const Separation& s, const Separation& t) { return !nested_direct(s, t); }

// Links of two separations s = (A1,A2) with separator X and t = (C1,C2) with separator Y.
struct GlobalLinks {
    std::array<VertexSet, 2> x_link;  // x_link[j]: X-link for C_{j+1} = X \ C_{other}
    std::array<VertexSet, 2> y_link;  // y_link[i]: Y-link for A_{i+1} = Y \ A_{other}
    VertexSet centre;
};

inline GlobalLinks global_links(const Separation& s, const Separation& t) {
    GlobalLinks l;
    auto x = s.separator(), y = t.separator();
    l.x_link[0] = set_difference(x, t.b);
    l.x_link[1] = set_difference(x, t.a);
    l.y_link[0] = set_difference(y, s.b);
    l.y_link[1] = set_difference(y, s.a);
    l.centre = set_intersection(x, y);
    return l;
}

inline const VertexSet& side(const Separation& s, int i) { return i == 0 ? s.a : s.b; }

// Characterisation of crossing through links; G must be connected.
inline bool cross_global_links(const Separation& s, const Separation& t) {
    auto l = global_links(s, t);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto strict_s = set_difference(side(s, i), side(s, 1 - i));
            auto strict_t = set_difference(side(t, j), side(t, 1 - j));
            if (l.y_link[i].empty() && l.x_link[j].empty() && !intersects(strict_s, strict_t)) return false;
        }
    return true;
}

// Edge variant of the third set: E(X cap Y, strict_i cap strict_j).
inline bool cross_global_edges(const Graph& g, const Separation& s, const Separation& t) {
    auto l = global_links(s, t);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto strict = set_intersection(set_difference(side(s, i), side(s, 1 - i)),
                                           set_difference(side(t, j), side(t, 1 - j)));
            if (l.y_link[i].empty() && l.x_link[j].empty() && g.edges_between(l.centre, strict).empty())
                return false;
        }
    return true;
}

inline bool cross_global(const Separation& s, const Separation& t) { return cross_global_direct(s, t); }

// The four corners in cyclic order: corners[i] and corners[i+2] are opposite.
struct Corners {
    std::array<Separation, 4> c;
};

inline Corners corners_global(const Separation& s, const Separation& t) {
    if (!cross_global_direct(s, t)) throw PreconditionError("corners require crossing separations");
    const auto &A = s.a, &B = s.b, &C = t.a, &D = t.b;
    Corners k;
    k.c[0] = {set_intersection(A, C), set_union(B, D)};
    k.c[1] = {set_intersection(A, D), set_union(B, C)};
    k.c[2] = {set_intersection(B, D), set_union(A, C)};
    k.c[3] = {set_intersection(B, C), set_union(A, D)};
    return k;
}

// All separations with separator x: every assignment of the components of G - x to sides.
// Returned as canonical unoriented representatives.
inline std::vector<Separation> separations_with_separator(const Graph& g, const VertexSet& x, bool tight_only,
                                                          std::size_t cap = 1u << 22) {
    auto comps = g.components(x);
    std::vector<char> tight(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) tight[i] = g.neighbourhood(comps[i]) == x;
    int c = static_cast<int>(comps.size());
    if (c > 24) throw CapOverflow("too many components for separation enumeration");
    std::set<Separation> out;
    std::uint64_t total = std::uint64_t{1} << c;
    if (total > cap) throw CapOverflow("separation enumeration cap exceeded");
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        VertexSet side_a;
        bool ta = false, tb = false;
        for (int i = 0; i < c; ++i) {
            if ((mask >> i) & 1) {
                side_a.insert(side_a.end(), comps[i].begin(), comps[i].end());
                ta = ta || tight[i];
            } else {
                tb = tb || tight[i];
            }
        }
        if (tight_only && !(ta && tb)) continue;
        out.insert(separation_from_side(g, x, normalized(side_a)).canonical());
    }
    return {out.begin(), out.end()};
}

template <class F>
inline void for_each_subset_up_to(int n, int k, F&& f) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        f(static_cast<const VertexSet&>(cur));
        if (static_cast<int>(cur.size()) == k) return;
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// Separations of order between lo and hi (canonical unoriented, sorted).
inline std::vector<Separation> enumerate_separations(const Graph& g, int lo, int hi, bool tight_only) {
    std::vector<Separation> out;
    for_each_subset_up_to(g.num_vertices(), hi, [&](const VertexSet& x) {
        if (static_cast<int>(x.size()) < lo) return;
        auto part = separations_with_separator(g, x, tight_only);
        out.insert(out.end(), part.begin(), part.end());
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Separation> tight_separations(const Graph& g, int k) { return enumerate_separations(g, k, k, true); }

}  // namespace locsep

#endif
