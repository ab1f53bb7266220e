#ifndef LOCSEP_TSTAR_HPP
#define LOCSEP_TSTAR_HPP

#include <array>
#include <map>
#include <set>
#include <vector>

#include "bottleneck.hpp"
#include "separation.hpp"

namespace locsep {

struct TStar {
    std::array<Separation, 3> s;
    bool operator==(const TStar&) const = default;
    auto operator<=>(const TStar&) const = default;
};

// Separator data of a T-star: X_i, X, Z and the links X_ij.
struct StarSets {
    std::array<VertexSet, 3> sep;
    VertexSet all, centre;
    VertexSet link[3][3];
};

template <class GetSep>
StarSets star_sets(GetSep&& get) {
    StarSets d;
    for (int i = 0; i < 3; ++i) d.sep[i] = get(i);
    d.all = set_union(set_union(d.sep[0], d.sep[1]), d.sep[2]);
    d.centre = set_intersection(set_intersection(d.sep[0], d.sep[1]), d.sep[2]);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) d.link[i][j] = set_difference(set_intersection(d.sep[i], d.sep[j]), d.centre);
    return d;
}

// Checks the separation property, distinctness, (Y1) and (Y2).
inline bool is_tstar(const Graph& g, const TStar& t) {
    for (int i = 0; i < 3; ++i) {
        if (!is_separation(g, t.s[i])) return false;
        for (int j = i + 1; j < 3; ++j)
            if (t.s[i] == t.s[j]) return false;
    }
    auto d = star_sets([&](int i) { return t.s[i].separator(); });
    VertexSet covered;
    for (int i = 0; i < 3; ++i) {
        auto strict = t.s[i].strict_a();
        if (intersects(covered, strict)) return false;
        covered = set_union(covered, strict);
    }
    if (covered != set_difference(g.all_vertices(), d.all)) return false;
    for (int i = 0; i < 3; ++i)
        for (int x : d.sep[i])
            if (!contains(d.sep[(i + 1) % 3], x) && !contains(d.sep[(i + 2) % 3], x)) return false;
    return true;
}

// Relevance with the first separation as base.
inline bool relevant_first(const Graph& g, const TStar& t) {
    if (!is_tight(g, t.s[0])) return false;
    auto d = star_sets([&](int i) { return t.s[i].separator(); });
    for (int x : d.link[1][2]) {
        for (int i = 1; i < 3; ++i) {
            const auto& x1i = d.link[0][i];
            bool ok = false;
            for (int y : x1i)
                if (g.adjacent(x, y)) ok = true;
            if (!ok) {
                auto targets = set_union(x1i, d.centre);
                for (auto& k : g.components(set_union(d.all, set_difference(g.all_vertices(), t.s[i].strict_a())))) {
                    auto nk = g.neighbourhood(k);
                    if (contains(nk, x) && intersects(nk, targets)) {
                        ok = true;
                        break;
                    }
                }
            }
            if (!ok) return false;
        }
    }
    return true;
}

inline bool relevant_tstar_check(const Graph& g, const TStar& t, const Separation& base) {
    bool found = false;
    for (int p = 0; p < 3; ++p) {
        if (t.s[p].canonical() != base.canonical()) continue;
        found = true;
        TStar re{{t.s[p], t.s[(p + 1) % 3], t.s[(p + 2) % 3]}};
        if (relevant_first(g, re)) return true;
    }
    if (!found) throw PreconditionError("base is not a constituent of the T-star");
    return false;
}

// All relevant T-stars of order <= k whose first element is the oriented base.
// Elements two and three are sorted to identify reorderings.
inline std::vector<TStar> enumerate_relevant_tstars_oriented(const Graph& g, const Separation& base, int k,
                                                             std::size_t cap = 1000000) {
    std::set<TStar> out;
    if (!is_tight(g, base)) return {};
    auto x1 = base.separator();
    auto s1 = base.strict_a();
    auto outside = base.strict_b();
    int m = static_cast<int>(x1.size());
    int n = g.num_vertices();
    std::vector<int> colour(m, 0);  // 0: X12, 1: Z, 2: X13
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
        std::vector<int> pool(outside);
        std::vector<int> cur;
        auto handle = [&](const VertexSet& x23) {
            auto x2 = set_union(set_union(x12, z), x23);
            auto x3 = set_union(set_union(x13, z), x23);
            auto all = set_union(x1, x23);
            std::vector<VertexSet> free_comps;
            std::vector<int> options;  // bit 1: side 2 allowed, bit 2: side 3 allowed
            for (auto& comp : g.components(all)) {
                if (is_subset(comp, s1)) continue;
                auto nk = g.neighbourhood(comp);
                int opt = (is_subset(nk, x2) ? 1 : 0) | (is_subset(nk, x3) ? 2 : 0);
                if (!opt) return;
                free_comps.push_back(comp);
                options.push_back(opt);
            }
            int f = static_cast<int>(free_comps.size());
            if (f > 20) throw CapOverflow("too many components in T-star enumeration");
            for (std::uint32_t mask = 0; mask < (1u << f); ++mask) {
                VertexSet side2, side3;
                bool ok = true;
                for (int i = 0; i < f && ok; ++i) {
                    int want = ((mask >> i) & 1) ? 2 : 1;
                    if (!(options[i] & want)) ok = false;
                    auto& target = want == 1 ? side2 : side3;
                    target.insert(target.end(), free_comps[i].begin(), free_comps[i].end());
                }
                if (!ok) continue;
                TStar t{{base, separation_from_side(g, x2, normalized(side2)),
                         separation_from_side(g, x3, normalized(side3))}};
                if (t.s[0] == t.s[1] || t.s[0] == t.s[2] || t.s[1] == t.s[2]) continue;
                if (t.s[2] < t.s[1]) std::swap(t.s[1], t.s[2]);
                if (!relevant_first(g, t)) continue;
                out.insert(t);
                if (out.size() > cap) throw CapOverflow("T-star cap exceeded");
            }
        };
        auto rec = [&](auto&& self, std::size_t start) -> void {
            handle(cur);
            if (static_cast<int>(cur.size()) == budget) return;
            for (std::size_t i = start; i < pool.size(); ++i) {
                cur.push_back(pool[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        (void)n;
        rec(rec, 0);
    }
    return {out.begin(), out.end()};
}

// Both orientations of an unoriented base.
inline std::vector<TStar> enumerate_relevant_tstars(const Graph& g, const Separation& base, int k) {
    auto a = enumerate_relevant_tstars_oriented(g, base, k);
    auto b = enumerate_relevant_tstars_oriented(g, base.inverse(), k);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline LevelSystem<Separation> global_level_system(const Graph& g, int k) {
    LevelSystem<Separation> sys;
    sys.k = k;
    sys.members = tight_separations(g, k);
    for (auto& s : sys.members) {
        std::set<std::array<int, 2>> pairs;
        for (auto& t : enumerate_relevant_tstars(g, s, k)) {
            std::array<int, 2> p{sys.index_of(t.s[1].canonical()), sys.index_of(t.s[2].canonical())};
            if (p[1] < p[0]) std::swap(p[0], p[1]);
            pairs.insert(p);
        }
        sys.partners.emplace_back(pairs.begin(), pairs.end());
    }
    return sys;
}

inline bool bottleneck_check_global(const Graph& g, const std::vector<Separation>& beta, int k) {
    if (beta.empty()) return false;
    std::set<Separation> in;
    for (auto& s : beta) {
        if (s.order() != k || !is_tight(g, s)) return false;
        in.insert(s.canonical());
    }
    for (auto& s : in)
        for (auto& t : enumerate_relevant_tstars(g, s, k))
            if (!in.count(t.s[1].canonical()) && !in.count(t.s[2].canonical())) return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& y) {
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = i + 1; j < y.size(); ++j)
            if (!g.adjacent(y[i], y[j])) return false;
    return true;
}

inline bool distinguishes(const Separation& s, const VertexSet& y, const VertexSet& z) {
    auto one = [](const Separation& t, const VertexSet& p, const VertexSet& q) {
        return is_subset(p, t.a) && intersects(p, t.strict_a()) && is_subset(q, t.b) && intersects(q, t.strict_b());
    };
    return one(s, y, z) || one(s.inverse(), y, z);
}

// All minimum-order separations distinguishing two cliques.
inline std::vector<Separation> clique_pair_bottleneck(const Graph& g, const VertexSet& y, const VertexSet& z) {
    if (!is_clique(g, y) || !is_clique(g, z)) throw PreconditionError("clique pair requires cliques");
    int bound = static_cast<int>(std::min(y.size(), z.size()));
    for (int m = 0; m < bound; ++m) {
        std::vector<Separation> found;
        for (auto& s : enumerate_separations(g, m, m, false))
            if (distinguishes(s, y, z)) found.push_back(s);
        if (!found.empty()) return found;
    }
    throw PreconditionError("no separation of order below the clique sizes distinguishes them");
}

inline NestedSet<Separation> nested_set_global(const Graph& g, int kmax) {
    NestedSet<Separation> out;
    std::vector<Separation> lower;
    std::function<bool(const Separation&, const Separation&)> cross = [](const Separation& a, const Separation& b) {
        return cross_global(a, b);
    };
    for (int k = 1; k <= kmax; ++k) {
        auto sys = global_level_system(g, k);
        auto level = nested_level(sys, lower, cross);
        lower.insert(lower.end(), level.members.begin(), level.members.end());
        out.levels.push_back(std::move(level));
    }
    return out;
}

}  // namespace locsep

#endif
