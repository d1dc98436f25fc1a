#include "doctest.h"

#include <set>

#include "causalsearch/mec.hpp"
#include "causalsearch/rng.hpp"
#include "causalsearch/verification.hpp"
#include "fixtures.hpp"

using namespace causalsearch;

namespace {

Pdag undirected_path_pdag(int n) {
    auto names = fixtures::path_names(n);
    Pdag g(names);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(names[size_t(i)], names[size_t(i + 1)]);
    return g;
}

// Lowest-ordered direct child of x, then the three-way rank rotation that
// keeps the ordering valid after reversing x -> y.
Ordering update_ordering(const Dag& g, const Ordering& pi, const NodeId& x, const NodeId& y) {
    auto anc = ancestry(g, x);
    REQUIRE(!anc.direct_children.empty());
    NodeId u = anc.direct_children.front();
    for (const auto& c : anc.direct_children)
        if (pi.rank_of(c) < pi.rank_of(u)) u = c;

    std::vector<NodeId> next = pi.sequence();
    next[size_t(pi.rank_of(x) - 1)] = y;
    next[size_t(pi.rank_of(u) - 1)] = x;
    if (u != y) next[size_t(pi.rank_of(y) - 1)] = u;
    return Ordering(std::move(next));
}

}  // namespace

TEST_CASE("essential graph of fig1") {
    CHECK(essential_graph(fixtures::fig1_truth()) == fixtures::fig1_essential());
}

TEST_CASE("essential graph of a single arc is undirected") {
    Pdag g({"a", "b"});
    g.add_arc("a", "b");
    Pdag e = essential_graph(Dag(std::move(g)));
    CHECK(e.num_arcs() == 0);
    CHECK(e.num_edges() == 1);
}

TEST_CASE("essential graph of the tightness DAG is fully undirected") {
    Pdag e = essential_graph(fixtures::tight_g1());
    CHECK(e.num_arcs() == 0);
    CHECK(e.num_edges() == 4);
}

TEST_CASE("same_mec") {
    CHECK(same_mec(fixtures::tight_g1(), fixtures::tight_g2()));
    CHECK(same_mec(fixtures::fig1_truth(), fixtures::fig1_truth()));
    Pdag chain({"a", "b", "c"});
    chain.add_arc("a", "b");
    chain.add_arc("b", "c");
    Pdag collider({"a", "b", "c"});
    collider.add_arc("a", "b");
    collider.add_arc("c", "b");
    CHECK(!same_mec(Dag(std::move(chain)), Dag(std::move(collider))));
    Pdag other({"a", "b"});
    other.add_arc("a", "b");
    CHECK_THROWS_AS(same_mec(fixtures::tight_g1(), Dag(std::move(other))), GraphError);
}

TEST_CASE("enumerate_mec of an undirected path has one member per root") {
    for (int n : {2, 3, 5}) {
        auto members = enumerate_mec(undirected_path_pdag(n), 1000);
        CHECK(static_cast<int>(members.size()) == n);
    }
}

TEST_CASE("enumerate_mec of the tightness skeleton contains both fixtures") {
    Pdag skel = essential_graph(fixtures::tight_g1());
    auto members = enumerate_mec(skel, 1000);
    CHECK(std::count(members.begin(), members.end(), fixtures::tight_g1()) == 1);
    CHECK(std::count(members.begin(), members.end(), fixtures::tight_g2()) == 1);
}

TEST_CASE("enumerate_mec cap carries the partial count") {
    try {
        enumerate_mec(undirected_path_pdag(6), 3);
        FAIL("expected CapExceededError");
    } catch (const CapExceededError& e) {
        CHECK(e.partial_count == 3);
    }
}

TEST_CASE("covered edges of the fixtures") {
    CHECK(covered_edges(fixtures::tight_g1()).arcs ==
          std::vector<Arc>{{"b", "a"}, {"c", "b"}, {"c", "d"}});
    CHECK(covered_edges(fixtures::fig1_truth()).arcs ==
          std::vector<Arc>{{"A", "B"}, {"A", "C"}, {"B", "D"}});
    CHECK(covered_edges(fixtures::path_dag(6, 1)).arcs == std::vector<Arc>{{"v1", "v2"}});
}

TEST_CASE("reverse_covered_edge moves between the tightness DAGs") {
    Dag g = reverse_covered_edge(fixtures::tight_g2(), {"b", "c"});
    CHECK(g == fixtures::tight_g1());

    Pdag single({"a", "b"});
    single.add_arc("a", "b");
    Dag flipped = reverse_covered_edge(Dag(std::move(single)), {"a", "b"});
    CHECK(flipped.pdag().has_arc("b", "a"));

    CHECK_THROWS_WITH_AS(reverse_covered_edge(fixtures::fig1_truth(), {"D", "E"}),
                         doctest::Contains("not covered"), GraphError);
}

TEST_CASE("chickering_sequence basics") {
    CHECK(chickering_sequence(fixtures::tight_g1(), fixtures::tight_g1()).empty());
    CHECK(chickering_sequence(fixtures::tight_g2(), fixtures::tight_g1()) ==
          std::vector<Arc>{{"b", "c"}});

    Dag p_fwd = fixtures::path_dag(3, 1);   // v1 -> v2 -> v3
    Dag p_bwd = fixtures::path_dag(3, 3);   // v3 -> v2 -> v1
    CHECK(chickering_sequence(p_fwd, p_bwd) == std::vector<Arc>{{"v1", "v2"}, {"v2", "v3"}});

    Pdag chain({"a", "b", "c"});
    chain.add_arc("a", "b");
    chain.add_arc("b", "c");
    Pdag collider({"a", "b", "c"});
    collider.add_arc("a", "b");
    collider.add_arc("c", "b");
    CHECK_THROWS_AS(chickering_sequence(Dag(std::move(chain)), Dag(std::move(collider))), GraphError);
}

TEST_CASE("chickering_sequence replays to the target with every step covered") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Dag gs = fixtures::random_moral_dag(8, rng);
        Dag gt = fixtures::random_mec_member(gs, rng);
        auto seq = chickering_sequence(gs, gt);
        Dag g = gs;
        size_t differing = 0;
        for (const auto& [u, v] : gs.arcs())
            if (!gt.pdag().has_arc(u, v)) ++differing;
        CHECK(seq.size() == differing);
        for (const auto& arc : seq) g = reverse_covered_edge(g, arc);  // throws if not covered
        CHECK(g == gt);
    }
}

TEST_CASE("CRG matching on the worked example with vertex a") {
    Pdag g({"a", "b", "u", "x", "y"});
    g.add_arc("a", "x");
    g.add_arc("a", "y");
    g.add_arc("a", "u");
    g.add_arc("a", "b");
    g.add_arc("x", "b");
    g.add_arc("x", "y");
    g.add_arc("x", "u");
    g.add_arc("y", "b");
    Dag g1(std::move(g));
    CHECK(covered_edges(g1).arcs == std::vector<Arc>{{"a", "x"}, {"x", "y"}, {"y", "b"}});

    Ordering pi({"a", "x", "u", "y", "b"});
    std::set<Arc> s;
    for (const auto& arc : g1.arcs())
        if (arc != Arc{"x", "y"}) s.insert(arc);
    Matching m = crg_matching(g1, pi, s);
    CHECK(m.arcs == std::vector<Arc>{{"a", "x"}, {"y", "b"}});
}

TEST_CASE("CRG matching skips covered arcs inside the conditioning set") {
    Pdag g({"b", "u", "x", "y"});
    g.add_arc("x", "b");
    g.add_arc("x", "y");
    g.add_arc("x", "u");
    g.add_arc("y", "b");
    Dag g3(std::move(g));
    Ordering pi({"x", "u", "y", "b"});
    std::set<Arc> s = {{"x", "b"}, {"x", "u"}, {"y", "b"}};
    Matching m = crg_matching(g3, pi, s);
    CHECK(m.arcs == std::vector<Arc>{{"x", "y"}});
}

TEST_CASE("CRG matching of a single node is empty") {
    Pdag g({"a"});
    Matching m = crg_matching(Dag(std::move(g)), Ordering({"a"}), {});
    CHECK(m.arcs.empty());
}

TEST_CASE("CRG matching requires a valid ordering") {
    CHECK_THROWS_AS(crg_matching(fixtures::chain3(), Ordering({"c", "b", "a"}), {}), GraphError);
}

TEST_CASE("covered-edge status changes under reversal") {
    Rng rng(37);
    int done = 0;
    while (done < 200) {
        Dag g = fixtures::random_moral_dag(8, rng);
        auto covered = covered_edges(g).arcs;
        if (covered.empty()) continue;
        Arc arc = covered[size_t(rng.below(covered.size()))];
        const auto& [x, y] = arc;
        Dag g2 = reverse_covered_edge(g, arc);
        auto before = covered_edges(g);
        auto after = covered_edges(g2);

        // (1) the reversed arc is covered in the result
        CHECK(after.contains({y, x}));
        // (2) arcs not touching x or y keep their status
        for (const auto& [u, v] : g.arcs()) {
            if (u == x || u == y || v == x || v == y) continue;
            CHECK(before.contains({u, v}) == after.contains({u, v}));
        }
        // (3) a->x covered before iff a->y covered after, for direct parents a
        for (const auto& a : ancestry(g, x).parents) {
            if (a == y) continue;
            auto direct = ancestry(g, a).direct_children;
            if (std::find(direct.begin(), direct.end(), x) == direct.end()) continue;
            CHECK(before.contains({a, x}) == after.contains({a, y}));
        }
        // (4) y->b covered before iff x->b covered after, for direct children b
        //     of y that x also points to
        for (const auto& b : ancestry(g, y).direct_children) {
            if (b == x || !g.pdag().has_arc(x, b)) continue;
            CHECK(before.contains({y, b}) == after.contains({x, b}));
        }
        ++done;
    }
}

TEST_CASE("CRG matchings keep their size along a chickering sequence") {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        Dag gs = fixtures::random_moral_dag(8, rng);
        Dag gt = fixtures::random_mec_member(gs, rng);
        std::set<Arc> s;
        for (const auto& arc : gs.arcs())
            if (gt.pdag().has_arc(arc.first, arc.second)) s.insert(arc);

        auto seq = chickering_sequence(gs, gt);
        Dag g = gs;
        Ordering pi = topological_order(gs);
        size_t size = crg_matching(g, pi, s).arcs.size();
        for (const auto& [x, y] : seq) {
            pi = update_ordering(g, pi, x, y);
            g = reverse_covered_edge(g, {x, y});
            REQUIRE(pi.valid_for(g.pdag()));
            size_t next = crg_matching(g, pi, s).arcs.size();
            CHECK(next == size);
            size = next;
        }
        CHECK(size == crg_matching(gt, pi, s).arcs.size());
    }
}

TEST_CASE("verification numbers within a MEC stay within a factor of two") {
    Rng rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        UGraph skel = fixtures::random_chordal(6, rng);
        auto members = enumerate_mec(skel.pdag(), 100000);
        int lo = 1 << 20, hi = 0;
        for (const auto& m : members) {
            int v = nu1(m);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK(hi <= 2 * lo);
    }
}

TEST_CASE("essential graph arcs equal the intersection over the class") {
    Rng rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        Dag g = fixtures::random_moral_dag(6, rng);
        Pdag e = essential_graph(g);
        auto members = enumerate_mec(e, 100000);
        REQUIRE(!members.empty());
        std::set<Arc> common(members[0].arcs().begin(), members[0].arcs().end());
        for (const auto& m : members) {
            auto arcs = m.arcs();
            std::set<Arc> cur(arcs.begin(), arcs.end());
            std::set<Arc> keep;
            std::set_intersection(common.begin(), common.end(), cur.begin(), cur.end(),
                                  std::inserter(keep, keep.begin()));
            common = std::move(keep);
        }
        auto earcs = e.arcs();
        CHECK(std::set<Arc>(earcs.begin(), earcs.end()) == common);
    }
}
