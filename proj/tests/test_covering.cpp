#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace locsep;
using oracle::vs;

namespace {

Graph square() { return Graph(EdgeList{{"a", "p"}, {"p", "b"}, {"b", "q"}, {"q", "a"}}); }

int cover_distance(const CoverWindow& w, int a, int b) { return w.cover.distances({a})[b]; }

bool is_cycle(const GraphDecomposition& d) {
    int n = static_cast<int>(d.nodes.size());
    if (static_cast<int>(d.edges.size()) != n) return false;
    std::vector<int> deg(n, 0);
    DisjointSets ds(n);
    for (auto& e : d.edges) ++deg[e.u], ++deg[e.v], ds.unite(e.u, e.v);
    for (int i = 0; i < n; ++i)
        if (deg[i] != 2 || ds.find(i) != ds.find(0)) return false;
    return true;
}

}  // namespace

TEST(CoverWindow, ClosedWhenShortCyclesGenerate) {
    auto g = fixtures::k4();
    auto w = build_cover_window(g, 3, 7);
    EXPECT_TRUE(w.closed);
    EXPECT_TRUE(w.certified);
    EXPECT_EQ(w.certified_radius, kInfinity);
    EXPECT_EQ(w.size(), 4);
    EXPECT_EQ(w.cover.num_edges(), 6);
}

TEST(CoverWindow, CycleUnrollsToPath) {
    auto g = fixtures::c6();
    auto w = build_cover_window(g, 4, 7);
    EXPECT_FALSE(w.closed);
    EXPECT_EQ(w.cover.num_edges(), w.size() - 1);
    EXPECT_TRUE(w.cover.connected());
    for (int v = 0; v < w.size(); ++v) EXPECT_LE(w.cover.degree(v), 2);
    for (int gv = 0; gv < g.num_vertices(); ++gv) {
        auto f = w.fibre(gv);
        ASSERT_FALSE(f.empty());
        for (int a : f)
            for (int b : f) EXPECT_EQ(cover_distance(w, a, b) % 6, 0);
    }
}

TEST(CoverWindow, RingIsCertified) {
    auto g = fixtures::ring6();
    auto w = build_cover_window(g, 3, 7);
    EXPECT_TRUE(w.certified);
    EXPECT_GE(w.certified_radius, 5);
    EXPECT_FALSE(w.closed);
    EXPECT_GT(w.fibre(g.vertex("a0")).size(), 1u);
}

TEST(CoverWindow, LocallyBijective) {
    for (auto& [name, r] : oracle::fixture_radii()) {
        auto g = fixtures::by_name(name);
        auto w = build_cover_window(g, r, 6);
        for (int v = 0; v < w.size(); ++v) {
            EXPECT_EQ(w.proj[v], w.proj[v]);
            std::set<int> images;
            for (auto [u, e] : w.cover.incident(v)) {
                EXPECT_EQ(w.edge_proj[e], g.edge_between(w.proj[u], w.proj[v]));
                images.insert(w.edge_proj[e]);
            }
            EXPECT_EQ(images.size(), static_cast<std::size_t>(w.cover.degree(v))) << name;
            if (w.complete[v]) {
                EXPECT_EQ(w.cover.degree(v), g.degree(w.proj[v])) << name;
            }
        }
    }
}

TEST(CoverWindow, ShortCyclesLiftClosed) {
    for (auto& [name, r] : oracle::fixture_radii()) {
        auto g = fixtures::by_name(name);
        auto w = build_cover_window(g, r, 6);
        auto cycles = short_cycles(g, r).cycles;
        for (int v = 0; v < w.size(); ++v) {
            if (!w.in_ball(v) || (!w.closed && w.depth[v] + r > w.certified_radius)) continue;
            for (auto& c : cycles) {
                int len = c.length();
                auto at = std::find(c.vertices.begin(), c.vertices.end(), w.proj[v]);
                if (at == c.vertices.end()) continue;
                int j = static_cast<int>(at - c.vertices.begin());
                int cur = v;
                for (int i = 0; i < len && cur >= 0; ++i) cur = w.step(cur, c.edges[(j + i) % len]);
                EXPECT_EQ(cur, v) << name;
            }
        }
    }
}

TEST(CoverWindow, DeckOrbitsRefineFibres) {
    for (auto [g, r] : std::vector<std::pair<Graph, int>>{{fixtures::ring6(), 3}, {fixtures::c6(), 4}, {fixtures::triangle_ring(6), 3}}) {
        auto w = build_cover_window(g, r, 8);
        auto o = deck_orbits(w);
        for (int a = 0; a < w.size(); ++a)
            for (int b = 0; b < w.size(); ++b)
                if (o.vertex_orbit[a] == o.vertex_orbit[b]) {
                    EXPECT_EQ(w.proj[a], w.proj[b]);
                }
        for (int e = 0; e < w.cover.num_edges(); ++e)
            for (int f = 0; f < w.cover.num_edges(); ++f)
                if (o.edge_orbit[e] == o.edge_orbit[f]) {
                    EXPECT_EQ(w.edge_proj[e], w.edge_proj[f]);
                }
        EXPECT_FALSE(o.generators.empty());
    }
}

TEST(Displacement, Examples) {
    struct Row {
        std::string name;
        int r, value, bound;
    };
    for (auto& row : std::vector<Row>{{"C6", 4, 6, 6}, {"RING6", 3, 6, 6}, {"TRIRING6", 3, 6, 6}, {"K4", 3, kInfinity, kInfinity},
                                      {"P3", 0, kInfinity, kInfinity}, {"BOWTIE", 3, kInfinity, kInfinity},
                                      {"K23", 4, kInfinity, kInfinity}, {"Q3", 4, kInfinity, 6}}) {
        auto d = displacement(fixtures::by_name(row.name), row.r, 8);
        EXPECT_EQ(d.value, row.value) << row.name;
        EXPECT_TRUE(d.exact) << row.name;
        EXPECT_EQ(d.induced_cycle_bound, row.bound) << row.name;
    }
}

TEST(Displacement, ExceedsRadiusAndBoundsInducedCycles) {
    for (auto& [name, r] : oracle::fixture_radii()) {
        auto g = fixtures::by_name(name);
        auto d = displacement(g, r, 8);
        EXPECT_GT(d.value, r) << name;
        EXPECT_LE(d.induced_cycle_bound, d.value) << name;
        EXPECT_EQ(d.induced_cycle_bound, oracle::min_induced_longer_than(oracle::Small(g), r)) << name;
    }
}

// Below the cycle space rank, the shortest cycle not generated by short ones is the displacement.
TEST(Displacement, MatchesCycleSpaceOracle) {
    for (auto [g, r] : std::vector<std::pair<Graph, int>>{{fixtures::c6(), 4}, {fixtures::ring6(), 3}, {fixtures::triangle_ring(6), 3},
                                                           {fixtures::clique_ring(5, 1), 3}}) {
        auto d = displacement(g, r, 8);
        ASSERT_TRUE(d.exact);
        EXPECT_EQ(d.value, oracle::shortest_cycle_outside_span(oracle::Small(g), r));
    }
}

TEST(Displacement, Threshold) {
    EXPECT_TRUE(below_threshold(1, 0, 0));
    EXPECT_FALSE(below_threshold(2, 0, kInfinity));
    EXPECT_TRUE(below_threshold(9, 3, kInfinity));
    EXPECT_TRUE(below_threshold(2, 3, 6));
    EXPECT_FALSE(below_threshold(3, 3, 6));
    for (int k = 1; k < 6; ++k)
        for (int r = 0; r < 6; ++r)
            for (int delta : {1, 4, 7, 12, kInfinity}) EXPECT_EQ(below_threshold(k, r, delta), within_guarantee(k, r, delta));
}

TEST(RingGenerator, Shapes) {
    auto rings = ring_generator(6, fixtures::k4(), "u", "v", 3);
    EXPECT_EQ(rings.displacement_bound, 6);
    EXPECT_EQ(rings.graph.num_vertices(), 18);
    EXPECT_EQ(rings.graph.num_edges(), 36);

    auto four = ring_generator(4, fixtures::k4(), "u", "v", 3);
    EXPECT_EQ(four.displacement_bound, 4);

    auto tri = ring_generator(6, Graph(EdgeList{{"a", "b"}, {"b", "c"}, {"c", "a"}}), "a", "b", 3);
    EXPECT_EQ(tri.displacement_bound, 6);
    auto d = decompose(tri.graph, 3, 1);
    EXPECT_EQ(d.nodes.size(), 6u);
    EXPECT_TRUE(is_cycle(d));
    for (auto& node : d.nodes) EXPECT_EQ(node.part.edges.size(), 3u);

    auto sq = ring_generator(6, square(), "a", "b", 4);
    EXPECT_EQ(sq.displacement_bound, 12);
    EXPECT_EQ(displacement(sq.graph, 4, 8).induced_cycle_bound, 12);

    EXPECT_THROW(ring_generator(2, fixtures::k4(), "u", "v", 3), PreconditionError);
    EXPECT_THROW(ring_generator(5, fixtures::k4(), "u", "u", 3), PreconditionError);
    EXPECT_THROW(ring_generator(5, fixtures::c6(), "0", "3", 4), PreconditionError);
}

TEST(RingGenerator, BoundAgreesWithDisplacement) {
    for (int n = 4; n <= 6; ++n) {
        auto ring = ring_generator(n, Graph(EdgeList{{"a", "b"}, {"b", "c"}, {"c", "a"}}), "a", "b", 3);
        auto d = displacement(ring.graph, 3, 8);
        EXPECT_TRUE(d.exact);
        EXPECT_EQ(d.value, ring.displacement_bound) << n;
    }
}

TEST(Lifting, RoundTripAndSingleSheet) {
    auto sq = ring_generator(6, square(), "a", "b", 4).graph;
    for (auto [g, r] : std::vector<std::pair<Graph, int>>{{fixtures::ring6(), 3}, {fixtures::triangle_ring(6), 3}, {sq, 4}, {fixtures::c6(), 4}}) {
        LocalGraph lg(g, r);
        auto w = build_cover_window(g, r, 8);
        int checked = 0;
        for (auto& s : enumerate_tight_local_separations(lg, 2)) {
            for (int anchor = 0; anchor < w.size(); ++anchor) {
                if (w.depth[anchor] > 2 || !contains(s.x, w.proj[anchor])) continue;
                auto lift = lift_local_separation(w, lg, s, anchor);
                std::set<int> images;
                for (int v : lift.x) images.insert(w.proj[v]);
                EXPECT_EQ(images.size(), lift.x.size());
                for (int a : lift.x)
                    for (int b : lift.x) EXPECT_LE(2 * cover_distance(w, a, b), r);
                EXPECT_EQ(project_local_separation(w, lg, lift), s);
                ++checked;
            }
        }
        EXPECT_GT(checked, 0);
    }
}

TEST(Lifting, RingCliqueSeparatorLiftsToCutVertex) {
    auto g = fixtures::ring6();
    LocalGraph lg(g, 3);
    auto w = build_cover_window(g, 3, 8);
    LocalGraph wl(w.cover, 3);
    for (auto& s : enumerate_tight_local_separations(lg, 1)) {
        ASSERT_EQ(s.order(), 1);
        for (int anchor : w.fibre(s.x[0])) {
            if (w.depth[anchor] > 3) continue;
            auto lift = lift_local_separation(w, lg, s, anchor);
            EXPECT_EQ(lift.x, VertexSet{anchor});
            EXPECT_TRUE(is_local_separation(wl, lift));
            // the lifted separator cuts the unrolled ring
            EXPECT_EQ(w.cover.components({anchor}).size(), 2u);
        }
    }
}

TEST(Lifting, AnchorMustLieOverSeparator) {
    auto g = fixtures::ring6();
    LocalGraph lg(g, 3);
    auto w = build_cover_window(g, 3, 6);
    auto s = enumerate_tight_local_separations(lg, 1)[0];
    int off = -1;
    for (int v = 0; v < w.size() && off < 0; ++v)
        if (!contains(s.x, w.proj[v])) off = v;
    EXPECT_THROW(lift_local_separation(w, lg, s, off), PreconditionError);
}

// A crossing pair below lifts to exactly one crossing pair near the anchor.
TEST(Lifting, CrossingMatchesLifts) {
    auto g = ring_generator(6, square(), "a", "b", 4).graph;
    const int r = 4;
    LocalGraph lg(g, r);
    auto tight = enumerate_tight_local_separations(lg, 2);
    ASSERT_EQ(tight.size(), 36u);
    int crossing = 0, checked = 0;
    for (auto& s : tight) {
        auto w = build_cover_window_at(g, r, 10, s.x[0]);
        ASSERT_TRUE(w.certified);
        LocalGraph wl(w.cover, r);
        auto ls = lift_local_separation(w, lg, s, 0);
        for (auto& t : tight) {
            if (s == t) continue;
            bool c = cross_local(lg, s, t);
            std::set<LocalSeparation> hits;
            for (int anchor = 0; anchor < w.size(); ++anchor) {
                if (w.depth[anchor] > 4 || !contains(t.x, w.proj[anchor])) continue;
                auto lt = lift_local_separation(w, lg, t, anchor);
                if (cross_local(wl, ls, lt)) hits.insert(lt.canonical());
            }
            EXPECT_EQ(hits.size(), c ? 1u : 0u);
            for (auto& h : hits) EXPECT_EQ(project_local_separation(w, lg, h).canonical(), t.canonical());
            crossing += c;
            ++checked;
        }
    }
    EXPECT_EQ(crossing, 60);  // ordered pairs
    EXPECT_GT(checked, 0);
}

TEST(Folding, RingFoldsToCycle) {
    auto g = fixtures::ring6();
    auto rep = verify_main_iii(g, 3, 1, 8);
    EXPECT_TRUE(rep.sufficient);
    EXPECT_TRUE(rep.passed) << rep.detail;
    EXPECT_EQ(rep.folded.nodes.size(), 6u);
    EXPECT_TRUE(is_cycle(rep.folded));
    EXPECT_TRUE(same_decomposition(rep.folded, decompose(g, 3, 1)));
}

TEST(Folding, CycleFoldsToSixNodes) {
    auto g = fixtures::c6();
    auto rep = verify_main_iii(g, 4, 1, 8);
    EXPECT_TRUE(rep.passed) << rep.detail;
    EXPECT_EQ(rep.folded.nodes.size(), 6u);
}

TEST(Folding, WindowChecksPass) {
    std::vector<std::pair<Graph, int>> cases;
    for (auto& [name, r] : oracle::fixture_radii()) cases.push_back({fixtures::by_name(name), r});
    cases.push_back({ring_generator(6, square(), "a", "b", 4).graph, 4});
    for (auto& [g, r] : cases)
        for (int k = 1; k <= 2; ++k) {
            auto d = displacement(g, r, 8);
            if (!below_threshold(k, r, d.value)) continue;
            auto ii = verify_main_ii(g, r, k, 8);
            auto iii = verify_main_iii(g, r, k, 8);
            if (ii.sufficient) {
                EXPECT_TRUE(ii.passed) << ii.detail;
            }
            if (iii.sufficient) {
                EXPECT_TRUE(iii.passed) << iii.detail;
            }
        }
}
