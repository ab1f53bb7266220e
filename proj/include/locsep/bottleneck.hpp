#ifndef LOCSEP_BOTTLENECK_HPP
#define LOCSEP_BOTTLENECK_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "errors.hpp"

namespace locsep {

// The members S_k of one order k, together with the (B) requirements: for each
// member, the index pairs of the other two constituents of every relevant
// T-star based at it (-1 when a constituent is not a member of S_k).
template <class Sep>
struct LevelSystem {
    int k = 0;
    std::vector<Sep> members;
    std::vector<std::vector<std::array<int, 2>>> partners;

    int index_of(const Sep& s) const {
        auto it = std::lower_bound(members.begin(), members.end(), s);
        return (it != members.end() && *it == s) ? static_cast<int>(it - members.begin()) : -1;
    }
};

// Largest subset of `alive` in which every member keeps a partner for each of its T-stars.
inline std::vector<char> greatest_fixpoint(const std::vector<std::vector<std::array<int, 2>>>& partners,
                                           std::vector<char> alive) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t < partners.size(); ++t) {
            if (!alive[t]) continue;
            for (auto& p : partners[t]) {
                bool ok = (p[0] >= 0 && alive[p[0]]) || (p[1] >= 0 && alive[p[1]]);
                if (!ok) {
                    alive[t] = 0;
                    changed = true;
                    break;
                }
            }
        }
    }
    return alive;
}

template <class Sep>
std::vector<char> gfp_members(const LevelSystem<Sep>& sys, const std::vector<char>& forbidden) {
    std::vector<char> alive(sys.members.size(), 1);
    for (std::size_t i = 0; i < alive.size(); ++i)
        if (forbidden[i]) alive[i] = 0;
    return greatest_fixpoint(sys.partners, alive);
}

// (B) on an index set of members.
template <class Sep>
bool satisfies_rule(const LevelSystem<Sep>& sys, const std::vector<char>& in) {
    for (std::size_t t = 0; t < sys.members.size(); ++t) {
        if (!in[t]) continue;
        for (auto& p : sys.partners[t])
            if (!((p[0] >= 0 && in[p[0]]) || (p[1] >= 0 && in[p[1]]))) return false;
    }
    return true;
}

template <class Sep>
struct NestedLevel {
    int k = 0;
    std::vector<Sep> members;         // N^k
    std::vector<Sep> bottleneck_union;  // X^k, the union of all k-bottlenecks
    std::map<Sep, int> crossing_count;  // x^k on X^k
};

template <class Sep>
struct NestedSet {
    std::vector<NestedLevel<Sep>> levels;
    std::vector<Sep> all() const {
        std::vector<Sep> out;
        for (auto& l : levels) out.insert(out.end(), l.members.begin(), l.members.end());
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<Sep> up_to(int k) const {
        std::vector<Sep> out;
        for (auto& l : levels)
            if (l.k <= k) out.insert(out.end(), l.members.begin(), l.members.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Builds one level of the nested set from its level system, the lower levels
// and a crossing predicate.
template <class Sep>
NestedLevel<Sep> nested_level(const LevelSystem<Sep>& sys, const std::vector<Sep>& lower,
                              const std::function<bool(const Sep&, const Sep&)>& cross) {
    NestedLevel<Sep> level;
    level.k = sys.k;
    std::size_t n = sys.members.size();
    auto in_union = gfp_members(sys, std::vector<char>(n, 0));
    std::vector<int> x(n, 0);
    std::vector<char> nested_lower(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (in_union[i]) level.bottleneck_union.push_back(sys.members[i]);
        for (auto& u : lower)
            if (cross(sys.members[i], u)) {
                nested_lower[i] = 0;
                break;
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((in_union[i] || in_union[j]) && cross(sys.members[i], sys.members[j])) {
                if (in_union[j]) ++x[i];
                if (in_union[i]) ++x[j];
            }
    for (std::size_t i = 0; i < n; ++i)
        if (in_union[i]) level.crossing_count[sys.members[i]] = x[i];
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_union[i] || !nested_lower[i]) continue;
        std::vector<char> forbidden(n, 0);
        for (std::size_t j = 0; j < n; ++j)
            if (in_union[j] && nested_lower[j] && x[j] < x[i]) forbidden[j] = 1;
        if (gfp_members(sys, forbidden)[i]) level.members.push_back(sys.members[i]);
    }
    return level;
}

template <class Sep>
struct MinimalBottlenecks {
    std::vector<std::vector<Sep>> bottlenecks;
    bool partial = false;
};

// Inclusion-minimal (B)-closed sets reachable by branching from singleton seeds.
template <class Sep>
MinimalBottlenecks<Sep> minimal_bottlenecks(const LevelSystem<Sep>& sys, std::size_t cap) {
    MinimalBottlenecks<Sep> out;
    std::size_t n = sys.members.size();
    auto alive = gfp_members(sys, std::vector<char>(n, 0));
    std::set<std::vector<int>> seen, found;
    std::size_t branches = 0;
    std::function<void(std::vector<int>)> grow = [&](std::vector<int> beta) {
        if (out.partial) return;
        if (!seen.insert(beta).second) return;
        if (++branches > cap) {
            out.partial = true;
            return;
        }
        std::vector<char> in(n, 0);
        for (int b : beta) in[b] = 1;
        for (int t : beta)
            for (auto& p : sys.partners[t]) {
                if ((p[0] >= 0 && in[p[0]]) || (p[1] >= 0 && in[p[1]])) continue;
                for (int q : {p[0], p[1]}) {
                    if (q < 0 || !alive[q]) continue;
                    auto next = beta;
                    next.insert(std::upper_bound(next.begin(), next.end(), q), q);
                    grow(next);
                }
                return;
            }
        found.insert(beta);
    };
    for (std::size_t s = 0; s < n; ++s)
        if (alive[s]) grow({static_cast<int>(s)});
    for (auto& b : found) {
        bool minimal = true;
        for (auto& c : found)
            if (c != b && std::includes(b.begin(), b.end(), c.begin(), c.end())) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        std::vector<Sep> members;
        for (int i : b) members.push_back(sys.members[i]);
        out.bottlenecks.push_back(members);
    }
    return out;
}

// f(k) with f(k) * r/2 < displacement making relevant local T-star unions 1-sheeted.
inline int sheet_bound(int k) { return k >= 3 ? (3 * k) / 2 : 0; }

}  // namespace locsep

#endif
