#include "doctest.h"

#include <set>

#include "causalsearch/mec.hpp"
#include "causalsearch/meek.hpp"
#include "causalsearch/rng.hpp"
#include "fixtures.hpp"

using namespace causalsearch;

namespace {

// Arcs common to every consistent extension, by brute force.
std::set<Arc> extension_intersection(const Pdag& g) {
    auto members = enumerate_mec(g, 1000000);
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
    return common;
}

Pdag fig1_partial() {
    Pdag g({"A", "B", "C", "D", "E", "F"});
    g.add_edge("A", "B");
    g.add_edge("A", "C");
    g.add_edge("A", "D");
    g.add_edge("B", "D");
    g.add_arc("C", "E");
    g.add_arc("D", "E");
    g.add_edge("D", "F");
    g.add_edge("E", "F");
    return g;
}

}  // namespace

TEST_CASE("meek closure orients the fig1 essential graph") {
    Pdag closed = meek_closure(fig1_partial());
    CHECK(closed == fixtures::fig1_essential());
}

TEST_CASE("meek closure is a fixpoint on oriented input") {
    Pdag g = fixtures::fig1_truth().pdag();
    CHECK(meek_closure(g) == g);
    CHECK(rule_trace(g).empty());
}

TEST_CASE("R4 configuration orients a->b") {
    Pdag g({"a", "b", "c", "d"});
    g.add_arc("d", "c");
    g.add_arc("c", "b");
    g.add_edge("d", "a");
    g.add_edge("a", "c");
    g.add_edge("a", "b");
    auto trace = rule_trace(g);
    Pdag closed = meek_closure(g);
    CHECK(closed.has_arc("a", "b"));
    bool saw_r4 = false;
    for (const auto& step : trace)
        if (step.oriented == Arc{"a", "b"}) saw_r4 = (step.rule == 4);
    CHECK(saw_r4);
}

TEST_CASE("R2 configuration yields a single-step trace") {
    Pdag g({"a", "b", "c"});
    g.add_arc("a", "c");
    g.add_arc("c", "b");
    g.add_edge("a", "b");
    auto trace = rule_trace(g);
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].rule == 2);
    CHECK(trace[0].oriented == Arc{"a", "b"});
}

TEST_CASE("fig1 trace replays to the closure") {
    Pdag start = fig1_partial();
    auto trace = rule_trace(start);
    REQUIRE(trace.size() == 2);
    CHECK(trace[0] == RuleStep{1, {"E", "F"}});
    CHECK(trace[1].oriented == Arc{"D", "F"});
    Pdag replay = start;
    for (const auto& step : trace) replay.orient_edge(replay.index_of(step.oriented.first),
                                                      replay.index_of(step.oriented.second));
    CHECK(replay == meek_closure(start));
}

TEST_CASE("closure is idempotent") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Dag g = fixtures::random_moral_dag(7, rng);
        Pdag e = essential_graph(g);
        CHECK(meek_closure(e) == e);
    }
}

TEST_CASE("closure is monotone in the starting arcs") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Dag g = fixtures::random_moral_dag(6, rng);
        auto arcs = g.arcs();
        // two nested random subsets of the true arcs over the skeleton
        std::vector<Arc> small, big;
        for (const auto& a : arcs)
            if (rng.below(3) == 0) small.push_back(a);
        big = small;
        for (const auto& a : arcs)
            if (rng.below(2) == 0 && std::find(big.begin(), big.end(), a) == big.end())
                big.push_back(a);

        auto build = [&](const std::vector<Arc>& known) {
            Pdag p(g.nodes());
            for (const auto& [u, v] : g.arcs()) {
                if (std::find(known.begin(), known.end(), Arc{u, v}) != known.end()) p.add_arc(u, v);
                else p.add_edge(u, v);
            }
            return p;
        };
        auto a1 = meek_closure(build(small)).arcs();
        auto a2 = meek_closure(build(big)).arcs();
        CHECK(std::includes(a2.begin(), a2.end(), a1.begin(), a1.end()));
    }
}

TEST_CASE("soundness and completeness against brute-force extensions") {
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Dag g = fixtures::random_moral_dag(6, rng);
        // reveal a random subset of arcs of a moral DAG
        Pdag partial(g.nodes());
        for (const auto& [u, v] : g.arcs()) {
            if (rng.below(3) == 0) partial.add_arc(u, v);
            else partial.add_edge(u, v);
        }
        auto closed = meek_closure(partial).arcs();
        auto want = extension_intersection(partial);
        CHECK(std::set<Arc>(closed.begin(), closed.end()) == want);
    }
}

TEST_CASE("conflicting rule applications report the inconsistency") {
    // c -> a and d -> b force a~b both ways: either orientation makes a new
    // unshielded collider, so no consistent extension exists.
    Pdag g({"a", "b", "c", "d"});
    g.add_arc("c", "a");
    g.add_arc("d", "b");
    g.add_edge("a", "b");
    CHECK_THROWS_WITH_AS(meek_closure(g), doctest::Contains("inconsistent"), GraphError);
}
