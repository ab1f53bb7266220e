#ifndef LOCSEP_CYCLES_HPP
#define LOCSEP_CYCLES_HPP

#include <climits>
#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace locsep {

inline constexpr int kInfinity = INT_MAX;

// vertices[i] and vertices[i+1 mod len] are joined by edges[i]. Canonical form:
// starts at the smallest vertex, and vertices[1] < vertices.back().
struct Cycle {
    std::vector<int> vertices;
    std::vector<int> edges;
    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const Cycle&) const = default;
    auto operator<=>(const Cycle&) const = default;
};

struct ShortCycleSet {
    int r = 0;
    std::vector<Cycle> cycles;
    std::vector<std::vector<int>> through;  // vertex -> indices of cycles containing it
};

inline Cycle make_cycle(const Graph& g, const std::vector<int>& vs) {
    Cycle c;
    c.vertices = vs;
    for (std::size_t i = 0; i < vs.size(); ++i) c.edges.push_back(g.edge_between(vs[i], vs[(i + 1) % vs.size()]));
    return c;
}

// All simple cycles of length <= r, canonical and sorted.
inline ShortCycleSet short_cycles(const Graph& g, int r, std::size_t cap = 1000000) {
    ShortCycleSet out;
    out.r = r;
    out.through.assign(g.num_vertices(), {});
    if (r < 3) return out;
    std::vector<int> path;
    std::vector<char> on_path(g.num_vertices(), 0);
    for (int s = 0; s < g.num_vertices(); ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        // Iterative DFS over neighbour cursors.
        std::vector<std::size_t> cursor(1, 0);
        while (!cursor.empty()) {
            int v = path.back();
            auto& nb = g.incident(v);
            if (cursor.back() == nb.size()) {
                on_path[v] = 0;
                path.pop_back();
                cursor.pop_back();
                continue;
            }
            int w = nb[cursor.back()++].first;
            if (w == s) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    out.cycles.push_back(make_cycle(g, path));
                    if (out.cycles.size() > cap) throw CapOverflow("short-cycle cap exceeded");
                }
                continue;
            }
            if (w < s || on_path[w] || static_cast<int>(path.size()) >= r) continue;
            on_path[w] = 1;
            path.push_back(w);
            cursor.push_back(0);
        }
        on_path[s] = 0;
    }
    std::sort(out.cycles.begin(), out.cycles.end());
    for (int i = 0; i < static_cast<int>(out.cycles.size()); ++i)
        for (int v : out.cycles[i].vertices) out.through[v].push_back(i);
    return out;
}

// Minimum length of an induced cycle longer than r, or kInfinity.
inline int min_induced_cycle_longer_than(const Graph& g, int r) {
    int best = kInfinity;
    int n = g.num_vertices();
    std::vector<int> path;
    std::vector<int> blocked(n, 0);  // adjacent interior path vertices, excluding start and tip
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        std::vector<std::size_t> cursor(1, 0);
        std::vector<char> on_path(n, 0);
        on_path[s] = 1;
        std::fill(blocked.begin(), blocked.end(), 0);
        while (!cursor.empty()) {
            int v = path.back();
            auto& nb = g.incident(v);
            if (cursor.back() == nb.size()) {
                path.pop_back();
                cursor.pop_back();
                on_path[v] = 0;
                if (!path.empty() && path.back() != s) {
                    // the parent becomes the tip again and stops blocking its neighbours
                    for (auto [w, e] : g.incident(path.back())) --blocked[w];
                }
                continue;
            }
            int w = nb[cursor.back()++].first;
            int len = static_cast<int>(path.size());
            if (w == s) {
                if (len >= 3 && len > r && path[1] < path.back()) best = std::min(best, len);
                continue;
            }
            if (w < s || on_path[w] || blocked[w] > 0) continue;
            if (len + 1 >= best) continue;
            // w may touch s only to close the cycle right away.
            bool touches_start = len >= 2 && g.adjacent(w, s);
            if (touches_start) {
                if (len + 1 > r && len + 1 >= 3) {
                    // chordless: w must not see interior path vertices (checked by blocked)
                    if (path[1] < w) best = std::min(best, len + 1);
                }
                continue;
            }
            if (v != s)
                for (auto [x, e] : g.incident(v)) ++blocked[x];
            on_path[w] = 1;
            path.push_back(w);
            cursor.push_back(0);
        }
    }
    return best;
}

// Bit vectors over GF(2).
class Gf2Basis {
public:
    explicit Gf2Basis(int bits) : words_((bits + 63) / 64) {}

    // Returns true if v was independent of the basis so far.
    bool insert(std::vector<std::uint64_t> v) {
        reduce(v);
        int p = pivot(v);
        if (p < 0) return false;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }
    bool in_span(std::vector<std::uint64_t> v) const {
        reduce(v);
        return pivot(v) < 0;
    }
    int rank() const { return static_cast<int>(rows_.size()); }
    std::vector<std::uint64_t> zero() const { return std::vector<std::uint64_t>(words_, 0); }
    static void flip(std::vector<std::uint64_t>& v, int bit) { v[bit / 64] ^= (std::uint64_t{1} << (bit % 64)); }

private:
    static int pivot(const std::vector<std::uint64_t>& v) {
        for (int w = 0; w < static_cast<int>(v.size()); ++w)
            if (v[w]) return w * 64 + __builtin_ctzll(v[w]);
        return -1;
    }
    void reduce(std::vector<std::uint64_t>& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            int p = pivots_[i];
            if ((v[p / 64] >> (p % 64)) & 1)
                for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= rows_[i][w];
        }
    }
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<int> pivots_;
};

inline std::vector<std::uint64_t> edge_vector(const Graph& g, const EdgeSet& edges) {
    std::vector<std::uint64_t> v((g.num_edges() + 63) / 64, 0);
    for (int e : edges) Gf2Basis::flip(v, e);
    return v;
}

inline int cycle_space_dimension(const Graph& g) {
    return g.num_edges() - g.num_vertices() + static_cast<int>(g.components().size());
}

inline bool short_cycles_generate_cycle_space(const Graph& g, int r) {
    auto sc = short_cycles(g, r);
    Gf2Basis basis(g.num_edges());
    for (auto& c : sc.cycles) basis.insert(edge_vector(g, c.edges));
    return basis.rank() == cycle_space_dimension(g);
}

}  // namespace locsep

#endif
