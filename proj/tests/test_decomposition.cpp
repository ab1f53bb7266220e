#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace locsep;
using oracle::es;
using oracle::sep;
using oracle::vs;

namespace {

LocalSeparation at_vertex(const LocalGraph& lg, const std::string& v) {
    auto list = local_separations_at(lg, lg.graph().vertex_set({v}), true);
    if (list.size() != 1) throw std::runtime_error("expected one separation at " + v);
    return list[0];
}

// Orientation of s whose second side holds edges of the clique q.
LocalSeparation pointing_into(const Graph& g, const LocalSeparation& s, const VertexSet& q) {
    for (int e : s.e2)
        if (contains(q, g.edge(e).u) && contains(q, g.edge(e).v)) return s;
    return s.inverse();
}

bool is_complete(const Graph& g, const Part& p) {
    int n = static_cast<int>(p.vertices.size());
    if (static_cast<int>(p.edges.size()) != n * (n - 1) / 2) return false;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
            if (!contains(p.edges, g.edge_between(p.vertices[i], p.vertices[j]))) return false;
    return true;
}

// H is a single cycle through all its nodes.
bool is_cycle(const GraphDecomposition& d) {
    int n = static_cast<int>(d.nodes.size());
    if (static_cast<int>(d.edges.size()) != n) return false;
    std::vector<int> deg(n, 0);
    DisjointSets ds(n);
    for (auto& e : d.edges) {
        if (e.u == e.v) return false;
        ++deg[e.u], ++deg[e.v];
        ds.unite(e.u, e.v);
    }
    for (int i = 0; i < n; ++i)
        if (deg[i] != 2 || ds.find(i) != ds.find(0)) return false;
    return true;
}

}  // namespace

TEST(LocalTStars, DegenerateStarAtRingVertex) {
    auto g = fixtures::ring6();
    LocalGraph lg(g, 3);
    auto s = at_vertex(lg, "a0");
    bool degenerate = false;
    for (auto& t : enumerate_relevant_local_tstars(lg, s, 1)) {
        EXPECT_TRUE(is_local_tstar(lg, t));
        EXPECT_TRUE(relevant_local_tstar_check(lg, t, t.s[0]));
        for (auto& c : t.s) {
            EXPECT_TRUE(c.x.empty() || c.x == vs(g, {"a0"}));
            degenerate = degenerate || (c.e1.empty() && c.x == vs(g, {"a0"}));
        }
    }
    EXPECT_TRUE(degenerate);
}

TEST(LocalTStars, ThreeWaySplitOfK23) {
    auto g = fixtures::k23();
    LocalGraph lg(g, 4);
    LocalTStar t{{induce_local(g, sep(g, {"u", "w", "x"}, {"u", "w", "y", "z"})),
                  induce_local(g, sep(g, {"u", "w", "y"}, {"u", "w", "x", "z"})),
                  induce_local(g, sep(g, {"u", "w", "z"}, {"u", "w", "x", "y"}))}};
    EXPECT_TRUE(is_local_tstar(lg, t));
    for (auto& base : t.s) EXPECT_TRUE(relevant_local_tstar_check(lg, t, base));
    auto found = enumerate_relevant_local_tstars(lg, t.s[0], 2);
    bool has = false;
    for (auto& f : found) {
        std::set<LocalSeparation> a(f.s.begin(), f.s.end()), b(t.s.begin(), t.s.end());
        has = has || a == b;
    }
    EXPECT_TRUE(has);
}

TEST(LocalTStars, EdgeCoverViolationRejected) {
    auto g = fixtures::k23();
    LocalGraph lg(g, 4);
    auto s = induce_local(g, sep(g, {"u", "w", "x"}, {"u", "w", "y", "z"}));
    LocalTStar t{{s, s, induce_local(g, sep(g, {"u", "w", "z"}, {"u", "w", "x", "y"}))}};
    EXPECT_FALSE(is_local_tstar(lg, t));
}

TEST(LocalTStars, BaseMustBeTight) {
    auto g = fixtures::c6();
    LocalGraph lg(g, 4);
    LocalSeparation loose{vs(g, {"0", "3"}), es(g, {"0-1", "2-3"}), es(g, {"0-5", "3-4"})};
    EXPECT_THROW(enumerate_relevant_local_tstars(lg, loose, 2), PreconditionError);
}

TEST(LocalBottlenecks, CheckExamples) {
    auto ring = fixtures::ring6();
    LocalGraph lr(ring, 3);
    EXPECT_TRUE(local_bottleneck_check(lr, {at_vertex(lr, "a0")}, 1));
    EXPECT_FALSE(local_bottleneck_check(lr, {}, 1));

    auto g = fixtures::k23();
    LocalGraph lg(g, 4);
    auto three = enumerate_tight_local_separations(lg, 2);
    ASSERT_EQ(three.size(), 3u);
    // each split is the base of a relevant star whose partners sit at {u,x} and {w,x}, which are not tight
    EXPECT_FALSE(local_bottleneck_check(lg, three, 2));
    EXPECT_FALSE(local_bottleneck_check(lg, {three[0]}, 2));
    EXPECT_EQ(gfp_bottleneck(lg, three, {}, 2).size(), 0u);
    EXPECT_EQ(gfp_bottleneck(lg, three, {three[1], three[2]}, 2).size(), 0u);
    EXPECT_TRUE(gfp_bottleneck(lg, {}, {}, 2).empty());
}

TEST(LocalBottlenecks, MinimalExamples) {
    auto ring = fixtures::ring6();
    LocalGraph lr(ring, 3);
    auto found = minimal_local_bottlenecks(lr, 1, 500);
    EXPECT_FALSE(found.partial);
    ASSERT_EQ(found.bottlenecks.size(), 6u);
    for (auto& b : found.bottlenecks) EXPECT_EQ(b.size(), 1u);

    auto k23 = minimal_local_bottlenecks(LocalGraph(fixtures::k23(), 4), 2, 500);
    EXPECT_FALSE(k23.partial);
    EXPECT_TRUE(k23.bottlenecks.empty());

    auto none = minimal_local_bottlenecks(lr, 1, 0);
    EXPECT_TRUE(none.partial);
    EXPECT_TRUE(none.bottlenecks.empty());
}

TEST(LocalBottlenecks, FixpointMatchesExhaustiveSearch) {
    std::mt19937 rng(29);
    int compared = 0;
    for (auto& [name, r] : oracle::fixture_radii()) {
        auto g = fixtures::by_name(name);
        LocalGraph lg(g, r);
        for (int k = 1; k <= 2; ++k) {
            auto sys = local_level_system(lg, k);
            if (sys.members.size() > 12) continue;
            for (int trial = 0; trial < 8; ++trial) {
                std::vector<char> forbidden(sys.members.size(), 0);
                std::vector<LocalSeparation> banned;
                if (trial > 0)
                    for (std::size_t i = 0; i < forbidden.size(); ++i)
                        if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) forbidden[i] = 1, banned.push_back(sys.members[i]);
                auto want = oracle::largest_closed_subset(sys, forbidden);
                std::vector<LocalSeparation> expect;
                for (std::size_t i = 0; i < want.size(); ++i)
                    if (want[i]) expect.push_back(sys.members[i]);
                EXPECT_EQ(gfp_bottleneck(lg, sys.members, banned, k), expect) << name << " k=" << k;
                ++compared;
            }
        }
    }
    EXPECT_GT(compared, 0);
}

TEST(LocalBottlenecks, UnionsOfBottlenecksAreBottlenecks) {
    auto sq = Graph(EdgeList{{"a", "p"}, {"p", "b"}, {"b", "q"}, {"q", "a"}});
    std::vector<std::pair<Graph, int>> cases{{fixtures::ring6(), 3}, {fixtures::triangle_ring(6), 3}, {fixtures::c6(), 6},
                                             {ring_generator(6, sq, "a", "b", 4).graph, 4}};
    int unions = 0;
    for (auto& [g, r] : cases) {
        LocalGraph lg(g, r);
        for (int k = 1; k <= 2; ++k) {
            auto found = minimal_local_bottlenecks(lg, k, 500).bottlenecks;
            for (std::size_t i = 0; i < found.size(); ++i)
                for (std::size_t j = i + 1; j < found.size() && j < i + 4; ++j) {
                    auto u = found[i];
                    u.insert(u.end(), found[j].begin(), found[j].end());
                    EXPECT_TRUE(local_bottleneck_check(lg, u, k));
                    ++unions;
                }
        }
    }
    EXPECT_GT(unions, 0);
}

TEST(LocalBottlenecks, SheetBound) {
    EXPECT_EQ(sheet_bound(1), 0);
    EXPECT_EQ(sheet_bound(2), 0);
    EXPECT_EQ(sheet_bound(3), 4);
    EXPECT_EQ(sheet_bound(4), 6);
    EXPECT_EQ(sheet_bound(5), 7);
    for (int k = 1; k <= 1000; ++k) {
        EXPECT_EQ(sheet_bound(k), k >= 3 ? (3 * k) / 2 : 0);
        EXPECT_LE(sheet_bound(k), 2 * (k - 1));
    }
}

TEST(LocalNestedSet, Examples) {
    auto ring = fixtures::ring6();
    auto n = nested_set_local(LocalGraph(ring, 3), 1);
    EXPECT_FALSE(n.beyond_guarantee);
    EXPECT_EQ(n.induced_cycle_bound, 6);
    auto all = n.set.all();
    ASSERT_EQ(all.size(), 6u);
    std::set<VertexSet> seps;
    for (auto& s : all) seps.insert(s.x);
    EXPECT_EQ(seps.size(), 6u);
    EXPECT_TRUE(nested_set_local(LocalGraph(fixtures::k4(), 3), 2).set.all().empty());
}

TEST(LocalNestedSet, GuaranteeFlag) {
    EXPECT_TRUE(within_guarantee(1, 0, 3));
    EXPECT_FALSE(within_guarantee(2, 0, kInfinity));
    EXPECT_TRUE(within_guarantee(5, 3, kInfinity));
    EXPECT_TRUE(within_guarantee(2, 3, 6));
    EXPECT_FALSE(within_guarantee(3, 3, 6));
    auto ring = fixtures::ring6();
    EXPECT_FALSE(nested_set_local(LocalGraph(ring, 3), 2).beyond_guarantee);
    EXPECT_TRUE(nested_set_local(LocalGraph(ring, 3), 3).beyond_guarantee);
}

TEST(LocalNestedSet, NestedTightAndMeetsBottlenecks) {
    auto sq = Graph(EdgeList{{"a", "p"}, {"p", "b"}, {"b", "q"}, {"q", "a"}});
    std::vector<std::pair<Graph, int>> cases;
    for (auto& [name, r] : oracle::fixture_radii()) cases.push_back({fixtures::by_name(name), r});
    cases.push_back({ring_generator(6, sq, "a", "b", 4).graph, 4});
    for (auto& [g, r] : cases) {
        LocalGraph lg(g, r);
        auto n = nested_set_local(lg, 2);
        auto all = n.set.all();
        for (auto& level : n.set.levels)
            for (auto& s : level.members) {
                EXPECT_EQ(s.order(), level.k);
                EXPECT_TRUE(is_tight_local(lg, s));
            }
        for (auto& s : all)
            for (auto& t : all) EXPECT_FALSE(cross_local(lg, s, t));
        std::set<LocalSeparation> in(all.begin(), all.end());
        for (int k = 1; k <= 2; ++k)
            for (auto& beta : minimal_local_bottlenecks(lg, k, 500).bottlenecks) {
                EXPECT_TRUE(local_bottleneck_check(lg, beta, k));
                bool met = false;
                for (auto& s : beta) met = met || in.count(s.canonical());
                EXPECT_TRUE(met);
            }
    }
}

TEST(LocalNestedSet, MatchesGlobalOnGeneratingFixtures) {
    for (auto& [name, r] : oracle::generating_fixtures()) {
        auto g = fixtures::by_name(name);
        LocalGraph lg(g, r);
        std::set<LocalSeparation> want;
        for (auto& s : nested_set_global(g, 2).all()) want.insert(induce_local(g, s).canonical());
        auto got = nested_set_local(lg, 2).set.all();
        EXPECT_EQ(std::set<LocalSeparation>(got.begin(), got.end()), want) << name;
    }
}

TEST(RestrictedSides, RingSeparationIntoClique) {
    auto g = fixtures::ring6();
    LocalGraph lg(g, 3);
    auto n = nested_set_local(lg, 1).set.all();
    auto f = local_family(lg, n);
    auto q0 = fixtures::ring_clique(g, 6, 2, 0);
    auto target = pointing_into(g, at_vertex(lg, "a0"), q0);
    int idx = -1;
    for (int i = 0; i < f.size(); ++i)
        if (f.seps[i] == target) idx = i;
    ASSERT_GE(idx, 0);
    EXPECT_EQ(restricted_right_side(f, idx), es(g, {"a0-a1", "a0-p0a", "a0-p0b"}));
}

TEST(RestrictedSides, SingletonFamily) {
    auto g = fixtures::bowtie();
    LocalGraph lg(g, 3);
    auto s = at_vertex(lg, "v");
    auto f = local_family(lg, {s});
    for (int i = 0; i < 2; ++i) EXPECT_EQ(restricted_right_side(f, i), f.seps[i].e2);
}

TEST(Cutouts, RingGivesSixPairs) {
    auto g = fixtures::ring6();
    LocalGraph lg(g, 3);
    auto n = nested_set_local(lg, 1).set.all();
    auto cs = cutouts(lg, n);
    ASSERT_EQ(cs.size(), 6u);
    for (int i = 0; i < 6; ++i) {
        auto q = fixtures::ring_clique(g, 6, 2, i);
        std::vector<LocalSeparation> want{pointing_into(g, at_vertex(lg, "a" + std::to_string(i)), q),
                                          pointing_into(g, at_vertex(lg, "a" + std::to_string((i + 1) % 6)), q)};
        std::sort(want.begin(), want.end());
        EXPECT_TRUE(std::count(cs.begin(), cs.end(), want)) << "Q" << i;
    }
}

TEST(Cutouts, BowtieGivesOnePerOrientation) {
    auto g = fixtures::bowtie();
    LocalGraph lg(g, 3);
    auto cs = cutouts(lg, {at_vertex(lg, "v")});
    EXPECT_EQ(cs.size(), 2u);
    for (auto& c : cs) EXPECT_EQ(c.size(), 1u);
}

TEST(Cutouts, PartitionOrientations) {
    std::mt19937 rng(31);
    std::vector<std::pair<Graph, int>> cases;
    for (auto& [name, r] : oracle::fixture_radii()) cases.push_back({fixtures::by_name(name), r});
    for (int i = 0; i < 20; ++i) cases.push_back({oracle::random_connected(rng, 8, 11), 3 + i % 2});
    for (auto& [g, r] : cases) {
        LocalGraph lg(g, r);
        auto n = nested_set_local(lg, 2).set.all();
        std::map<LocalSeparation, int> count;
        for (auto& c : cutouts(lg, n))
            for (auto& s : c) ++count[s];
        EXPECT_EQ(count.size(), 2 * n.size());
        for (auto& s : n) {
            EXPECT_EQ(count[s.canonical()], 1);
            EXPECT_EQ(count[s.canonical().inverse()], 1);
        }
    }
}

TEST(Cutouts, EqualSplittingStarsOnGeneratingFixtures) {
    for (auto& [name, r] : oracle::generating_fixtures()) {
        auto g = fixtures::by_name(name);
        LocalGraph lg(g, r);
        auto ng = nested_set_global(g, 2).all();
        std::vector<LocalSeparation> nl;
        for (auto& s : ng) nl.push_back(induce_local(g, s));
        auto td = tree_decomposition(g, ng);
        auto hd = build_decomposition(lg, nl);
        EXPECT_TRUE(same_decomposition(td, hd)) << name;
        if (nl.empty()) {
            EXPECT_TRUE(cutouts(lg, nl).empty()) << name;
            continue;
        }
        std::set<std::vector<LocalSeparation>> stars, outs;
        for (auto& node : td.nodes) stars.insert(node.members);
        for (auto& c : cutouts(lg, nl)) outs.insert(c);
        EXPECT_EQ(stars, outs) << name;
        // restricted sides are the edges from the separator into the star's interior
        auto f = local_family(lg, nl);
        for (auto& node : td.nodes)
            for (auto& s : node.members) {
                int idx = -1;
                for (int i = 0; i < f.size(); ++i)
                    if (f.seps[i] == s) idx = i;
                ASSERT_GE(idx, 0);
                auto interior_minus_x = set_difference(node.part.vertices, s.x);
                EXPECT_EQ(restricted_right_side(f, idx), g.edges_between(s.x, interior_minus_x)) << name;
            }
    }
}

TEST(Decompose, RingIsCycleOfCliques) {
    auto g = fixtures::ring6();
    auto d = decompose(g, 3, 1);
    EXPECT_TRUE(d.valid);
    EXPECT_FALSE(d.beyond_guarantee);
    ASSERT_EQ(d.nodes.size(), 6u);
    EXPECT_TRUE(is_cycle(d));
    std::set<VertexSet> parts;
    for (auto& node : d.nodes) {
        EXPECT_EQ(node.part.vertices.size(), 4u);
        EXPECT_TRUE(is_complete(g, node.part));
        parts.insert(node.part.vertices);
    }
    for (int i = 0; i < 6; ++i) EXPECT_TRUE(parts.count(fixtures::ring_clique(g, 6, 2, i)));
    std::set<VertexSet> labels;
    for (auto& e : d.edges) labels.insert(e.label.x);
    EXPECT_EQ(labels.size(), 6u);
}

TEST(Decompose, EmptySetGivesWholeGraph) {
    for (auto [g, r, k] : std::vector<std::tuple<Graph, int, int>>{{fixtures::k4(), 3, 1}, {fixtures::k4(), 3, 2},
                                                                    {fixtures::k4(), 3, 3}, {fixtures::k23(), 4, 2}}) {
        auto d = decompose(g, r, k);
        ASSERT_EQ(d.nodes.size(), 1u);
        EXPECT_TRUE(d.edges.empty());
        EXPECT_EQ(d.nodes[0].part.vertices, g.all_vertices());
        EXPECT_EQ(d.nodes[0].part.edges, g.all_edges());
    }
    auto g = fixtures::cube();
    auto empty = build_decomposition(LocalGraph(g, 4), {});
    ASSERT_EQ(empty.nodes.size(), 1u);
    EXPECT_EQ(empty.nodes[0].part.edges, g.all_edges());
}

// At radius 0 every local component is a single edge, so only vertices of degree
// at least two separate and the parts are single edges.
TEST(Decompose, ZeroRadiusSplitsIntoEdges) {
    for (auto& g : {fixtures::p3(), fixtures::c6()}) {
        auto d = decompose(g, 0, 1);
        EXPECT_TRUE(d.valid);
        EXPECT_EQ(d.nodes.size(), static_cast<std::size_t>(g.num_edges()));
        std::set<EdgeSet> parts;
        for (auto& node : d.nodes) {
            EXPECT_EQ(node.part.edges.size(), 1u);
            EXPECT_EQ(node.part.vertices.size(), 2u);
            parts.insert(node.part.edges);
        }
        EXPECT_EQ(parts.size(), static_cast<std::size_t>(g.num_edges()));
    }
    // a vertex of degree three yields a vertex node
    auto star = Graph(EdgeList{{"c", "x"}, {"c", "y"}, {"c", "z"}});
    auto d = decompose(star, 0, 1);
    EXPECT_EQ(d.nodes.size(), 4u);
    bool vertex_node = false;
    for (auto& node : d.nodes) vertex_node = vertex_node || (node.part.vertices == vs(star, {"c"}) && node.part.edges.empty());
    EXPECT_TRUE(vertex_node);
}

TEST(Decompose, RejectsBadInput) {
    auto g = Graph(EdgeList{{"a", "b"}, {"c", "d"}});
    EXPECT_THROW(decompose(g, 3, 1), PreconditionError);
    EXPECT_THROW(decompose(fixtures::k4(), -1, 1), PreconditionError);
}

TEST(Decompose, AxiomsOnFixturesAndRandomGraphs) {
    std::mt19937 rng(37);
    std::vector<std::tuple<Graph, int, int>> cases;
    for (auto& [name, r] : oracle::fixture_radii())
        for (int k = 1; k <= 2; ++k) cases.push_back({fixtures::by_name(name), r, k});
    for (int i = 0; i < 40; ++i) {
        int n = std::uniform_int_distribution<int>(3, 10)(rng);
        cases.push_back({oracle::random_connected(rng, n, std::uniform_int_distribution<int>(n - 1, 20)(rng)),
                         std::uniform_int_distribution<int>(0, 4)(rng), std::uniform_int_distribution<int>(1, 2)(rng)});
    }
    for (auto& [g, r, k] : cases) {
        auto d = decompose(g, r, k);
        auto axioms = oracle::decomposition_axioms(g, d);
        EXPECT_EQ(d.valid, axioms.empty());
        if (!d.beyond_guarantee) {
            EXPECT_EQ(axioms, "") << "r=" << r << " k=" << k;
        }
        LocalGraph lg(g, r);
        for (auto& e : d.edges) {
            EXPECT_LE(e.label.order(), k);
            EXPECT_TRUE(is_tight_local(lg, e.label));
        }
    }
}

TEST(Validation, ReportsAxiomAndWitness) {
    auto g = fixtures::p3();
    GraphDecomposition d;
    d.nodes.push_back({"n0", {}, {vs(g, {"a", "b"}), es(g, {"a-b"})}});
    auto rep = validate_decomposition(g, d);
    EXPECT_FALSE(rep.ok);
    EXPECT_EQ(rep.axiom, "H1");
    d.nodes.push_back({"n1", {}, {vs(g, {"b", "c"}), es(g, {"b-c"})}});
    d.nodes.push_back({"n2", {}, {vs(g, {"b"}), {}}});
    d.edges.push_back({"e0", 0, 2, {}});
    rep = validate_decomposition(g, d);
    EXPECT_FALSE(rep.ok);
    EXPECT_EQ(rep.axiom, "H2");
    EXPECT_EQ(rep.witness, "b");
    EXPECT_THROW(require_valid(g, d), ValidationError);
    d.edges.push_back({"e1", 1, 2, {}});
    EXPECT_TRUE(validate_decomposition(g, d).ok);
}

TEST(Contract, RingEdge) {
    auto g = fixtures::ring6();
    auto d = decompose(g, 3, 1);
    for (auto& e : d.edges) {
        auto c = contract(g, d, {e.label});
        EXPECT_EQ(c.nodes.size(), 5u);
        EXPECT_EQ(c.edges.size(), 5u);
        EXPECT_TRUE(is_cycle(c));
        auto merged = set_union(d.nodes[e.u].part.vertices, d.nodes[e.v].part.vertices);
        int found = 0;
        for (auto& node : c.nodes) found += node.part.vertices == merged;
        EXPECT_EQ(found, 1);
        EXPECT_TRUE(validate_decomposition(g, c).ok);
    }
}

TEST(Contract, AllEdgesGiveOneNode) {
    auto g = fixtures::ring6();
    auto d = decompose(g, 3, 1);
    std::vector<LocalSeparation> labels;
    for (auto& e : d.edges) labels.push_back(e.label);
    auto c = contract(g, d, labels);
    ASSERT_EQ(c.nodes.size(), 1u);
    EXPECT_TRUE(c.edges.empty());
    EXPECT_EQ(c.nodes[0].part.vertices, g.all_vertices());
    EXPECT_EQ(c.nodes[0].part.edges, g.all_edges());
}

TEST(Contract, UnknownLabelRejected) {
    auto g = fixtures::ring6();
    auto d = decompose(g, 3, 1);
    auto bow = fixtures::bowtie();
    EXPECT_THROW(contract(g, d, {LocalSeparation{vs(g, {"p0a"}), {}, {}}}), PreconditionError);
}

TEST(Refinement, LevelsContractToLowerLevels) {
    std::vector<std::pair<Graph, int>> cases;
    for (auto& [name, r] : oracle::fixture_radii()) cases.push_back({fixtures::by_name(name), r});
    auto sq = Graph(EdgeList{{"a", "p"}, {"p", "b"}, {"b", "q"}, {"q", "a"}});
    cases.push_back({ring_generator(6, sq, "a", "b", 4).graph, 4});
    for (auto& [g, r] : cases)
        for (int k = 1; k <= 2; ++k) {
            auto top = decompose_with_nested(g, r, k);
            for (int l = 0; l <= k; ++l) {
                std::vector<LocalSeparation> drop;
                for (auto& level : top.nested.set.levels)
                    if (level.k > l) drop.insert(drop.end(), level.members.begin(), level.members.end());
                auto lower = l == 0 ? build_decomposition(LocalGraph(g, r), {}) : decompose(g, r, l);
                EXPECT_TRUE(same_decomposition(contract(g, top.decomposition, drop), lower)) << "r=" << r << " k=" << k << " l=" << l;
            }
        }
}

TEST(Canonicity, RingAndBowtie) {
    auto ring = fixtures::ring6();
    auto d = decompose(ring, 3, 1);
    std::vector<int> rot(ring.num_vertices());
    for (int v = 0; v < ring.num_vertices(); ++v) {
        auto name = ring.name(v);
        int i = name[1] - '0';
        std::string next = name[0] == 'a' ? "a" + std::to_string((i + 1) % 6) : "p" + std::to_string((i + 1) % 6) + name.substr(2);
        rot[v] = ring.vertex(next);
    }
    ASSERT_TRUE(is_automorphism(ring, rot));
    EXPECT_TRUE(canonicity_check(ring, d, rot));
    std::vector<int> id(ring.num_vertices());
    std::iota(id.begin(), id.end(), 0);
    EXPECT_TRUE(canonicity_check(ring, d, id));

    auto bow = fixtures::bowtie();
    auto db = decompose(bow, 3, 1);
    std::vector<int> swap(bow.num_vertices());
    for (int v = 0; v < bow.num_vertices(); ++v) {
        auto name = bow.name(v);
        swap[v] = name == "v" ? v : bow.vertex((name[0] == 'a' ? "b" : "a") + name.substr(1));
    }
    ASSERT_TRUE(is_automorphism(bow, swap));
    EXPECT_TRUE(canonicity_check(bow, db, swap));

    std::vector<int> bad(id);
    std::swap(bad[ring.vertex("a0")], bad[ring.vertex("p0a")]);
    EXPECT_FALSE(is_automorphism(ring, bad));
    EXPECT_THROW(canonicity_check(ring, d, bad), PreconditionError);
}

TEST(Canonicity, AutomorphismCounts) {
    // rotations and reflections of the ring times swaps of private pairs
    EXPECT_EQ(automorphisms(fixtures::ring6()).size(), 12u * 64u);
    EXPECT_EQ(automorphisms(fixtures::bowtie()).size(), 8u);
    EXPECT_EQ(automorphisms(fixtures::k4()).size(), 24u);
    EXPECT_EQ(automorphisms(fixtures::cube()).size(), 48u);
}

TEST(Canonicity, EveryAutomorphismOfSmallFixtures) {
    for (auto& [name, r] : oracle::fixture_radii()) {
        if (name == "RING6") continue;  // exercised by the acceptance run
        auto g = fixtures::by_name(name);
        auto d = decompose(g, r, 2);
        for (auto& phi : automorphisms(g)) EXPECT_TRUE(canonicity_check(g, d, phi)) << name;
    }
}

TEST(Decompose, IdsAreStableAndDeterministic) {
    auto g = fixtures::ring6();
    auto a = decompose(g, 3, 1), b = decompose(g, 3, 1);
    ASSERT_EQ(a.nodes.size(), b.nodes.size());
    std::set<std::string> ids;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        EXPECT_EQ(a.nodes[i].id, b.nodes[i].id);
        EXPECT_TRUE(ids.insert(a.nodes[i].id).second);
    }
    for (std::size_t i = 0; i < a.edges.size(); ++i) EXPECT_EQ(a.edges[i].id, b.edges[i].id);
}
