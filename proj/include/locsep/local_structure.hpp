#ifndef LOCSEP_LOCAL_STRUCTURE_HPP
#define LOCSEP_LOCAL_STRUCTURE_HPP

#include <array>
#include <vector>

#include "local.hpp"

namespace locsep {

struct Coupling {
    bool coupled = false;
    int shared_vertex = -1;  // witness when the separators meet
    int cycle = -1;          // witness alternating short cycle otherwise
};

inline Coupling r_coupled(const LocalGraph& lg, const VertexSet& x, const VertexSet& y) {
    Coupling c;
    auto common = set_intersection(x, y);
    if (!common.empty()) {
        c.coupled = true;
        c.shared_vertex = common.front();
        return c;
    }
    std::set<int> candidates;
    for (int v : x)
        for (int ci : lg.cycles().through[v]) candidates.insert(ci);
    for (int ci : candidates) {
        // collapse the cyclic X/Y pattern and count runs
        std::vector<int> marks;
        for (int v : lg.cycles().cycles[ci].vertices) {
            int m = contains(x, v) ? 1 : contains(y, v) ? 2 : 0;
            if (m && (marks.empty() || marks.back() != m)) marks.push_back(m);
        }
        while (marks.size() > 1 && marks.front() == marks.back()) marks.pop_back();
        if (marks.size() >= 4) {
            c.coupled = true;
            c.cycle = ci;
            return c;
        }
    }
    return c;
}

struct LinkReport {
    std::array<VertexSet, 2> x_link;  // X-link for F_1, F_2
    std::array<VertexSet, 2> y_link;  // Y-link for E_1, E_2
    VertexSet centre;
    std::array<std::array<EdgeSet, 2>, 2> centre_edges;  // E_i cap F_j cap boundary(X cap Y)
};

namespace detail {

// Sides (0 or 1 bitmask) of the first boundary(Y) edge over all W_r(X) walks from `start`.
inline int first_entry_sides(const LocalGraph& lg, const VertexSet& x, int start, const VertexSet& y,
                             const EdgeSet& f1, const EdgeSet& f2) {
    const auto& walks = lg.x_walks(x);
    std::map<int, std::vector<const XWalk*>> from;
    for (auto& w : walks)
        if (w.from != w.to) from[w.from].push_back(&w);
    auto idx = [&](int v) { return static_cast<int>(std::lower_bound(x.begin(), x.end(), v) - x.begin()); };
    int found = 0;
    std::set<std::pair<int, std::uint64_t>> seen;
    auto dfs = [&](auto&& self, int cur, std::uint64_t visited) -> void {
        if (!seen.insert({cur, visited}).second) return;
        for (auto* w : from[cur]) {
            if ((visited >> idx(w->to)) & 1) continue;
            int hit = -1;
            for (std::size_t j = 1; j < w->vertices.size(); ++j)
                if (contains(y, w->vertices[j])) {
                    hit = static_cast<int>(j);
                    break;
                }
            if (hit >= 0) {
                int e = w->edges[hit - 1];
                if (contains(f1, e)) found |= 1;
                if (contains(f2, e)) found |= 2;
            } else {
                self(self, w->to, visited | (std::uint64_t{1} << idx(w->to)));
            }
        }
    };
    dfs(dfs, start, std::uint64_t{1} << idx(start));
    return found;
}

inline void require_tomic(const LocalGraph& lg, const VertexSet& x) {
    if (!lg.r_tomic(x)) throw PreconditionError("separator " + lg.graph().describe(x) + " is not r-tomic");
}

}  // namespace detail

inline LinkReport links(const LocalGraph& lg, const LocalSeparation& s, const LocalSeparation& t) {
    detail::require_tomic(lg, s.x);
    detail::require_tomic(lg, t.x);
    const auto& g = lg.graph();
    LinkReport rep;
    for (int v : set_difference(s.x, t.x)) {
        int sides = detail::first_entry_sides(lg, s.x, v, t.x, t.e1, t.e2);
        if (sides & 1) rep.x_link[0].push_back(v);
        if (sides & 2) rep.x_link[1].push_back(v);
    }
    for (int v : set_difference(t.x, s.x)) {
        int sides = detail::first_entry_sides(lg, t.x, v, s.x, s.e1, s.e2);
        if (sides & 1) rep.y_link[0].push_back(v);
        if (sides & 2) rep.y_link[1].push_back(v);
    }
    rep.centre = set_intersection(s.x, t.x);
    auto cb = g.boundary(rep.centre);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rep.centre_edges[i][j] = set_intersection(set_intersection(s.side(i), t.side(j)), cb);
    return rep;
}

inline bool cross_local(const LocalGraph& lg, const LocalSeparation& s, const LocalSeparation& t) {
    detail::require_tomic(lg, s.x);
    detail::require_tomic(lg, t.x);
    if (!r_coupled(lg, s.x, t.x).coupled) return false;
    auto rep = links(lg, s, t);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (rep.x_link[j].empty() && rep.y_link[i].empty() && rep.centre_edges[i][j].empty()) return false;
    return true;
}

// s >= t in the local order; defined for r-coupled pairs only.
inline bool local_geq(const LocalGraph& lg, const LocalSeparation& s, const LocalSeparation& t) {
    if (!r_coupled(lg, s.x, t.x).coupled) throw PreconditionError("local order needs r-coupled separators");
    auto rep = links(lg, s, t);
    return rep.x_link[1].empty() && rep.y_link[0].empty() && rep.centre_edges[0][1].empty();
}

inline bool local_succ(const LocalGraph& lg, const LocalSeparation& s, const LocalSeparation& t) {
    return !(s == t) && local_geq(lg, s, t);
}

// The corner for E_i and F_j (i, j in {0, 1}).
inline LocalSeparation local_corner(const LocalGraph& lg, const LocalSeparation& s, const LocalSeparation& t, int i,
                                    int j) {
    if (!r_coupled(lg, s.x, t.x).coupled) throw PreconditionError("corners need r-coupled separators");
    auto rep = links(lg, s, t);
    auto l = set_union(set_union(rep.y_link[i], rep.x_link[j]), rep.centre);
    auto bl = lg.graph().boundary(l);
    auto other = set_union(s.side(1 - i), t.side(1 - j));
    return {l, set_difference(bl, other), set_intersection(bl, other)};
}

}  // namespace locsep

#endif
