#ifndef LOCSEP_LOCAL_TSTAR_HPP
#define LOCSEP_LOCAL_TSTAR_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <vector>

#include "bottleneck.hpp"
#include "local_structure.hpp"
#include "tstar.hpp"

namespace locsep {

struct LocalTStar {
    std::array<LocalSeparation, 3> s;
    bool operator==(const LocalTStar&) const = default;
    auto operator<=>(const LocalTStar&) const = default;
};

// Checks that the elements are distinct local separations, and (LY1)-(LY3).
inline bool is_local_tstar(const LocalGraph& lg, const LocalTStar& t) {
    for (int i = 0; i < 3; ++i) {
        if (!is_local_separation(lg, t.s[i])) return false;
        for (int j = i + 1; j < 3; ++j)
            if (t.s[i] == t.s[j]) return false;
    }
    auto d = star_sets([&](int i) { return t.s[i].x; });
    auto boundary = lg.graph().boundary(d.all);
    EdgeSet covered;
    for (int i = 0; i < 3; ++i) {
        if (intersects(covered, t.s[i].e1)) return false;
        covered = set_union(covered, t.s[i].e1);
    }
    if (covered != boundary) return false;
    for (int i = 0; i < 3; ++i)
        for (int x : d.sep[i])
            if (!contains(d.sep[(i + 1) % 3], x) && !contains(d.sep[(i + 2) % 3], x)) return false;
    if (d.all.empty()) return true;
    for (auto& c : lg.components(d.all).classes) {
        bool inside = false;
        for (int i = 0; i < 3; ++i) inside = inside || is_subset(c, t.s[i].e1);
        if (!inside) return false;
    }
    return true;
}

inline bool relevant_local_first(const LocalGraph& lg, const LocalTStar& t) {
    if (!is_tight_local(lg, t.s[0])) return false;
    const auto& g = lg.graph();
    auto d = star_sets([&](int i) { return t.s[i].x; });
    if (d.link[1][2].empty()) return true;
    auto& lc = lg.components(d.all);
    auto touches = [&](const EdgeSet& cls, const VertexSet& vs) {
        for (int e : cls)
            if (contains(vs, g.edge(e).u) || contains(vs, g.edge(e).v)) return true;
        return false;
    };
    for (int x : d.link[1][2]) {
        for (int i = 1; i < 3; ++i) {
            const auto& x1i = d.link[0][i];
            bool ok = false;
            for (int y : x1i)
                if (g.adjacent(x, y)) ok = true;
            auto targets = set_union(x1i, d.centre);
            for (std::size_t c = 0; c < lc.classes.size() && !ok; ++c) {
                const auto& cls = lc.classes[c];
                if (is_subset(cls, t.s[i].e1) && touches(cls, {x}) && touches(cls, targets)) ok = true;
            }
            if (!ok) return false;
        }
    }
    return true;
}

inline bool relevant_local_tstar_check(const LocalGraph& lg, const LocalTStar& t, const LocalSeparation& base) {
    bool found = false;
    for (int p = 0; p < 3; ++p) {
        if (t.s[p].canonical() != base.canonical()) continue;
        found = true;
        LocalTStar re{{t.s[p], t.s[(p + 1) % 3], t.s[(p + 2) % 3]}};
        if (relevant_local_first(lg, re)) return true;
    }
    if (!found) throw PreconditionError("base is not a constituent of the local T-star");
    return false;
}

// Relevant local T-stars of order <= k with the oriented base as first element.
inline std::vector<LocalTStar> enumerate_relevant_local_tstars_oriented(const LocalGraph& lg, const LocalSeparation& base,
                                                                        int k, std::size_t cap = 0) {
    if (cap == 0) cap = lg.limits().tstars;
    if (!is_tight_local(lg, base)) throw PreconditionError("T-star base must be tight");
    const auto& g = lg.graph();
    std::set<LocalTStar> out;
    const auto& x1 = base.x;
    const auto& e1 = base.e1;
    int m = static_cast<int>(x1.size());
    // vertices that may join the separator: outside x1 and not an end of an E1 edge
    std::vector<char> banned(g.num_vertices(), 0);
    for (int v : x1) banned[v] = 1;
    for (int e : e1) banned[g.edge(e).u] = banned[g.edge(e).v] = 1;
    std::vector<int> pool;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!banned[v]) pool.push_back(v);
    int total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
        int c = code;
        VertexSet x12, z, x13;
        for (int i = 0; i < m; ++i) {
            int col = c % 3;
            c /= 3;
            (col == 0 ? x12 : col == 1 ? z : x13).push_back(x1[i]);
        }
        int budget = k - static_cast<int>(z.size()) - static_cast<int>(std::max(x12.size(), x13.size()));
        if (budget < 0) continue;
        auto handle = [&](const VertexSet& x23) {
            auto x2 = set_union(set_union(x12, z), x23);
            auto x3 = set_union(set_union(x13, z), x23);
            auto all = set_union(x1, x23);
            auto& lc = lg.components(all);
            if (!is_subset(e1, lc.boundary)) return;
            std::vector<int> rest;
            std::vector<int> options;
            for (std::size_t ci = 0; ci < lc.classes.size(); ++ci) {
                const auto& cls = lc.classes[ci];
                if (is_subset(cls, e1)) continue;
                if (intersects(cls, e1)) return;
                int opt = 3;
                for (int e : cls) {
                    int end = contains(all, g.edge(e).u) ? g.edge(e).u : g.edge(e).v;
                    if (!contains(x2, end)) opt &= ~1;
                    if (!contains(x3, end)) opt &= ~2;
                }
                if (!opt) return;
                rest.push_back(static_cast<int>(ci));
                options.push_back(opt);
            }
            int f = static_cast<int>(rest.size());
            if (f > 20) throw CapOverflow("too many local components in T-star enumeration");
            auto b2 = g.boundary(x2), b3 = g.boundary(x3);
            for (std::uint32_t mask = 0; mask < (1u << f); ++mask) {
                EdgeSet side2, side3;
                bool ok = true;
                for (int i = 0; i < f && ok; ++i) {
                    int want = ((mask >> i) & 1) ? 2 : 1;
                    if (!(options[i] & want)) ok = false;
                    auto& target = want == 1 ? side2 : side3;
                    const auto& cls = lc.classes[rest[i]];
                    target.insert(target.end(), cls.begin(), cls.end());
                }
                if (!ok) continue;
                side2 = normalized(side2);
                side3 = normalized(side3);
                LocalTStar t{{base, LocalSeparation{x2, side2, set_difference(b2, side2)},
                              LocalSeparation{x3, side3, set_difference(b3, side3)}}};
                if (!is_local_separation(lg, t.s[1]) || !is_local_separation(lg, t.s[2])) continue;
                if (t.s[0] == t.s[1] || t.s[0] == t.s[2] || t.s[1] == t.s[2]) continue;
                if (t.s[2] < t.s[1]) std::swap(t.s[1], t.s[2]);
                if (!relevant_local_first(lg, t)) continue;
                out.insert(t);
                if (out.size() > cap) throw CapOverflow("local T-star cap exceeded");
            }
        };
        std::vector<int> cur;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            handle(cur);
            if (static_cast<int>(cur.size()) == budget) return;
            for (std::size_t i = start; i < pool.size(); ++i) {
                cur.push_back(pool[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }
    return {out.begin(), out.end()};
}

inline std::vector<LocalTStar> enumerate_relevant_local_tstars(const LocalGraph& lg, const LocalSeparation& base, int k) {
    auto a = enumerate_relevant_local_tstars_oriented(lg, base, k);
    auto b = enumerate_relevant_local_tstars_oriented(lg, base.inverse(), k);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Level system over a given member set (canonical local separations of order k).
inline LevelSystem<LocalSeparation> local_level_system(const LocalGraph& lg, int k,
                                                       std::vector<LocalSeparation> members) {
    LevelSystem<LocalSeparation> sys;
    sys.k = k;
    for (auto& s : members) s = s.canonical();
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    sys.members = std::move(members);
    for (auto& s : sys.members) {
        std::set<std::array<int, 2>> pairs;
        for (auto& t : enumerate_relevant_local_tstars(lg, s, k)) {
            std::array<int, 2> p{sys.index_of(t.s[1].canonical()), sys.index_of(t.s[2].canonical())};
            if (p[1] < p[0]) std::swap(p[0], p[1]);
            pairs.insert(p);
        }
        sys.partners.emplace_back(pairs.begin(), pairs.end());
    }
    return sys;
}

inline LevelSystem<LocalSeparation> local_level_system(const LocalGraph& lg, int k) {
    return local_level_system(lg, k, enumerate_local_separations(lg, k, k, true));
}

inline bool local_bottleneck_check(const LocalGraph& lg, const std::vector<LocalSeparation>& beta, int k) {
    if (beta.empty()) return false;
    std::set<LocalSeparation> in;
    for (auto& s : beta) {
        if (s.order() != k || !is_tight_local(lg, s)) return false;
        in.insert(s.canonical());
    }
    for (auto& s : in)
        for (auto& t : enumerate_relevant_local_tstars(lg, s, k))
            if (!in.count(t.s[1].canonical()) && !in.count(t.s[2].canonical())) return false;
    return true;
}

// Largest subset of S \ forbidden closed under the (B_r) rule.
inline std::vector<LocalSeparation> gfp_bottleneck(const LocalGraph& lg, const std::vector<LocalSeparation>& s,
                                                   const std::vector<LocalSeparation>& forbidden, int k) {
    auto sys = local_level_system(lg, k, s);
    std::vector<char> banned(sys.members.size(), 0);
    for (auto& f : forbidden) {
        int i = sys.index_of(f.canonical());
        if (i >= 0) banned[i] = 1;
    }
    auto alive = gfp_members(sys, banned);
    std::vector<LocalSeparation> out;
    for (std::size_t i = 0; i < alive.size(); ++i)
        if (alive[i]) out.push_back(sys.members[i]);
    return out;
}

struct NestedLocalSet {
    NestedSet<LocalSeparation> set;
    bool beyond_guarantee = false;
    int induced_cycle_bound = kInfinity;  // lower bound on the displacement
};

// Whether k < K(G, r) follows from the induced-cycle lower bound on the displacement.
inline bool within_guarantee(int k, int r, int induced_bound) {
    if (k <= 1) return true;
    if (r == 0) return false;
    if (induced_bound == kInfinity) return true;
    return static_cast<long long>(k - 1) * r < induced_bound;
}

inline NestedLocalSet nested_set_local(const LocalGraph& lg, int kmax) {
    NestedLocalSet out;
    out.induced_cycle_bound = min_induced_cycle_longer_than(lg.graph(), lg.r());
    out.beyond_guarantee = !within_guarantee(kmax, lg.r(), out.induced_cycle_bound);
    std::vector<LocalSeparation> lower;
    std::function<bool(const LocalSeparation&, const LocalSeparation&)> cross =
        [&lg](const LocalSeparation& a, const LocalSeparation& b) { return cross_local(lg, a, b); };
    for (int k = 1; k <= kmax; ++k) {
        auto sys = local_level_system(lg, k);
        auto level = nested_level(sys, lower, cross);
        lower.insert(lower.end(), level.members.begin(), level.members.end());
        out.set.levels.push_back(std::move(level));
    }
    return out;
}

inline MinimalBottlenecks<LocalSeparation> minimal_local_bottlenecks(const LocalGraph& lg, int k, std::size_t cap) {
    if (cap == 0) return {{}, true};
    return minimal_bottlenecks(local_level_system(lg, k), cap);
}

}  // namespace locsep

#endif
