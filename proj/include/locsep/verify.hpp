#ifndef LOCSEP_VERIFY_HPP
#define LOCSEP_VERIFY_HPP

#include <set>
#include <string>
#include <vector>

#include "covering.hpp"
#include "decomposition.hpp"

namespace locsep {

struct SuiteResult {
    explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

    std::string name;
    bool passed = true;
    bool applicable = true;
    long checks = 0;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

inline std::vector<std::string> suite_names() {
    return {"correspondence", "refinement", "canonicity", "main-ii", "main-iii"};
}

// Global objects of order <= k against the local objects they induce.
inline SuiteResult correspondence_suite(const Graph& g, int r, int k) {
    SuiteResult res{"correspondence"};
    if (!short_cycles_generate_cycle_space(g, r)) {
        res.applicable = false;
        res.detail = "short cycles do not generate the cycle space";
        return res;
    }
    LocalGraph lg(g, r);
    auto loc = [&](const Separation& s) { return induce_local(g, s); };
    // separations and tightness
    for (auto& s : enumerate_separations(g, 1, k, false)) {
        if (!s.proper()) continue;
        ++res.checks;
        if (is_tight(g, s) != is_tight_local(lg, loc(s))) res.fail("tightness differs for " + describe(g, loc(s)));
    }
    std::set<LocalSeparation> induced;
    std::vector<Separation> tight;
    for (int m = 1; m <= k; ++m)
        for (auto& s : tight_separations(g, m)) {
            tight.push_back(s);
            induced.insert(loc(s).canonical());
        }
    auto local_tight = enumerate_tight_local_separations(lg, k);
    ++res.checks;
    if (induced.size() != tight.size() || std::set<LocalSeparation>(local_tight.begin(), local_tight.end()) != induced)
        res.fail("tight separations and tight local separations do not correspond");
    // pairwise relations over all orientations
    std::vector<Separation> oriented;
    for (auto& s : tight) {
        oriented.push_back(s);
        oriented.push_back(s.inverse());
    }
    for (auto& s : oriented)
        for (auto& t : oriented) {
            auto sr = loc(s), tr = loc(t);
            ++res.checks;
            if (cross_global(s, t) != cross_local(lg, sr, tr)) res.fail("crossing differs at " + describe(g, sr) + " / " + describe(g, tr));
            if (!r_coupled(lg, sr.x, tr.x).coupled) continue;
            auto gl = global_links(s, t);
            auto ll = links(lg, sr, tr);
            if (gl.x_link != ll.x_link || gl.y_link != ll.y_link || gl.centre != ll.centre)
                res.fail("links differ at " + describe(g, sr) + " / " + describe(g, tr));
            if (geq(s, t) != local_geq(lg, sr, tr)) res.fail("order differs at " + describe(g, sr) + " / " + describe(g, tr));
            if (cross_global(s, t)) {
                auto c = corners_global(s, t);
                const int idx[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
                for (int q = 0; q < 4; ++q)
                    if (!(loc(c.c[q]) == local_corner(lg, sr, tr, idx[q][0], idx[q][1])))
                        res.fail("corner differs at " + describe(g, sr) + " / " + describe(g, tr));
            }
        }
    // relevant T-stars per oriented base
    for (int m = 1; m <= k; ++m)
        for (auto& s : tight_separations(g, m))
            for (auto& base : {s, s.inverse()}) {
                std::set<LocalTStar> a, b;
                for (auto& t : enumerate_relevant_tstars_oriented(g, base, m)) {
                    LocalTStar lt{{loc(t.s[0]), loc(t.s[1]), loc(t.s[2])}};
                    if (lt.s[2] < lt.s[1]) std::swap(lt.s[1], lt.s[2]);
                    a.insert(lt);
                }
                for (auto& t : enumerate_relevant_local_tstars_oriented(lg, loc(base), m)) b.insert(t);
                ++res.checks;
                if (a != b) res.fail("relevant T-stars differ at base " + describe(g, loc(base)));
            }
    // bottleneck systems, minimal bottlenecks and nested sets
    for (int m = 1; m <= k; ++m) {
        auto gs = global_level_system(g, m);
        auto ls = local_level_system(lg, m);
        std::vector<LocalSeparation> mapped;
        for (auto& s : gs.members) mapped.push_back(loc(s).canonical());
        ++res.checks;
        bool same = mapped.size() == ls.members.size();
        if (same) {
            // compare partner pairs through the member correspondence
            for (std::size_t i = 0; i < mapped.size() && same; ++i) {
                int li = ls.index_of(mapped[i]);
                if (li < 0) {
                    same = false;
                    break;
                }
                std::set<std::array<int, 2>> pa, pb;
                for (auto p : gs.partners[i]) {
                    std::array<int, 2> q{p[0] < 0 ? -1 : ls.index_of(mapped[p[0]]), p[1] < 0 ? -1 : ls.index_of(mapped[p[1]])};
                    if (q[1] < q[0]) std::swap(q[0], q[1]);
                    pa.insert(q);
                }
                pb.insert(ls.partners[li].begin(), ls.partners[li].end());
                same = pa == pb;
            }
        }
        if (!same) res.fail("bottleneck rules differ at order " + std::to_string(m));
        auto mg = minimal_bottlenecks(gs, lg.limits().branches);
        auto ml = minimal_bottlenecks(ls, lg.limits().branches);
        std::set<std::vector<LocalSeparation>> ba, bb;
        for (auto& beta : mg.bottlenecks) {
            std::vector<LocalSeparation> v;
            for (auto& s : beta) v.push_back(loc(s).canonical());
            std::sort(v.begin(), v.end());
            ba.insert(v);
        }
        for (auto& beta : ml.bottlenecks) bb.insert(beta);
        ++res.checks;
        if (!mg.partial && !ml.partial) {
            if (ba != bb) res.fail("minimal bottlenecks differ at order " + std::to_string(m));
        } else {
            // truncated searches visit different subsets; check each side against the other rule
            for (auto& beta : ba)
                if (!local_bottleneck_check(lg, beta, m)) res.fail("induced bottleneck rejected at order " + std::to_string(m));
            for (auto& beta : bb) {
                std::vector<char> banned(gs.members.size(), 1);
                for (auto& s : beta)
                    for (std::size_t i = 0; i < mapped.size(); ++i)
                        if (mapped[i] == s) banned[i] = 0;
                auto alive = gfp_members(gs, banned);
                if (std::count(alive.begin(), alive.end(), 1) != static_cast<long>(beta.size()))
                    res.fail("local bottleneck not closed globally at order " + std::to_string(m));
            }
        }
    }
    auto ng = nested_set_global(g, k).all();
    auto nl = nested_set_local(lg, k).set.all();
    std::vector<LocalSeparation> mapped;
    for (auto& s : ng) mapped.push_back(loc(s).canonical());
    std::sort(mapped.begin(), mapped.end());
    ++res.checks;
    if (mapped != nl) res.fail("nested sets differ");
    // decompositions
    ++res.checks;
    auto td = tree_decomposition(g, ng);
    if (!same_decomposition(td, build_decomposition(lg, nl))) res.fail("local decomposition differs from the tree-decomposition");
    if (!same_decomposition(td, build_decomposition_global(g, ng))) res.fail("global cutouts differ from splitting stars");
    return res;
}

// Contracting the higher levels of decompose(k) gives decompose(l) for every l <= k.
inline SuiteResult refinement_suite(const Graph& g, int r, int k) {
    SuiteResult res{"refinement"};
    auto top = decompose_with_nested(g, r, k);
    for (int l = 0; l <= k; ++l) {
        std::vector<LocalSeparation> higher;
        for (auto& level : top.nested.set.levels)
            if (level.k > l) higher.insert(higher.end(), level.members.begin(), level.members.end());
        auto contracted = contract(g, top.decomposition, higher);
        ++res.checks;
        if (!same_decomposition(contracted, decompose(g, r, l)))
            res.fail("contraction to level " + std::to_string(l) + " differs");
    }
    return res;
}

inline SuiteResult canonicity_suite(const Graph& g, int r, int k, std::size_t cap = 100000) {
    SuiteResult res{"canonicity"};
    auto d = decompose(g, r, k);
    for (auto& phi : automorphisms(g, cap)) {
        ++res.checks;
        if (!canonicity_check(g, d, phi)) res.fail("automorphism not respected");
    }
    return res;
}

inline SuiteResult window_suite(const std::string& name, const WindowReport& rep) {
    SuiteResult res{name};
    res.checks = rep.lifts;
    res.passed = rep.passed;
    res.applicable = rep.sufficient;
    res.detail = rep.detail;
    return res;
}

inline SuiteResult run_suite(const std::string& name, const Graph& g, int r, int k, int radius) {
    if (name == "correspondence") return correspondence_suite(g, r, k);
    if (name == "refinement") return refinement_suite(g, r, k);
    if (name == "canonicity") return canonicity_suite(g, r, k);
    if (name == "main-ii") return window_suite(name, verify_main_ii(g, r, k, radius));
    if (name == "main-iii") return window_suite(name, verify_main_iii(g, r, k, radius));
    throw PreconditionError("unknown suite " + name);
}

}  // namespace locsep

#endif
