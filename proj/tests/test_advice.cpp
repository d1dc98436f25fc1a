#include "doctest.h"

#include <set>

#include "causalsearch/advice.hpp"
#include "causalsearch/mec.hpp"
#include "causalsearch/oracle.hpp"
#include "causalsearch/rng.hpp"
#include "causalsearch/search.hpp"
#include "causalsearch/verification.hpp"
#include "fixtures.hpp"

using namespace causalsearch;

TEST_CASE("min_hop_coverage on the quality-measure fixture") {
    CHECK(min_hop_coverage(fixtures::psi_truth(4), {"a", "e", "z2"}) == 1);
}

TEST_CASE("a minimum vertex cover of the truth is within one hop") {
    Rng rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        Dag g = fixtures::random_moral_dag(7, rng);
        if (covered_edges(g).arcs.empty()) continue;
        CHECK(min_hop_coverage(g, verifying_set_atomic(g)) <= 1);
    }
}

TEST_CASE("min_hop_coverage on the star follows the definition") {
    // covered endpoints are {v1,v2,v3}; v3 is two hops from v1
    CHECK(min_hop_coverage(fixtures::star_truth(8), {"v1"}) == 2);
}

TEST_CASE("min_hop_coverage edge cases") {
    Pdag collider({"a", "b", "c"});
    collider.add_arc("a", "b");
    collider.add_arc("c", "b");
    CHECK(min_hop_coverage(Dag(std::move(collider)), {}) == 0);  // no covered edges
    CHECK_THROWS_AS(min_hop_coverage(fixtures::psi_truth(4), {}), GraphError);
}

TEST_CASE("psi_proxy on the quality-measure fixture is 2 via {c,d}") {
    auto q = psi_proxy(fixtures::psi_truth(4), {"a", "e", "z2"});
    CHECK(q.h == 1);
    CHECK(q.psi == 2);
    REQUIRE(q.rho_by_radius.size() == 2);
    CHECK(q.rho_by_radius[0] == std::pair<int, int>{0, 0});
    CHECK(q.rho_by_radius[1] == std::pair<int, int>{1, 2});

    Oracle oracle(fixtures::psi_truth(4));
    oracle.intervene(InterventionSet::atomic({"a", "e", "z2"}));
    UGraph skel = skeleton(fixtures::psi_truth(4).pdag());
    auto ball = hop_neighborhood(skel, {"a", "e", "z2"}, 1);
    CHECK(oracle.relevant_nodes(ball) == std::vector<NodeId>{"c", "d"});
}

TEST_CASE("perfect advice has psi zero") {
    Rng rng(89);
    for (int trial = 0; trial < 15; ++trial) {
        Dag g = fixtures::random_moral_dag(7, rng);
        CHECK(psi_proxy(g, verifying_set_atomic(g)).psi == 0);
    }
}

TEST_CASE("single edge: either endpoint verifies, psi is zero") {
    Pdag g({"a", "b"});
    g.add_arc("a", "b");
    Dag dag(std::move(g));
    CHECK(psi_proxy(dag, {"a"}).psi == 0);
    CHECK(psi_proxy(dag, {"b"}).psi == 0);
}

TEST_CASE("psi_full on the quality-measure fixture") {
    CHECK(psi_full(fixtures::psi_truth(4), fixtures::psi_advice(4), 100) == 2);
    CHECK(psi_full(fixtures::psi_truth(4), fixtures::psi_truth(4), 100) == 0);
}

TEST_CASE("psi_full equals psi_proxy when the minimum cover is unique") {
    Dag p = fixtures::path_dag(5, 2);
    auto covers = all_min_vertex_covers(covered_edges(p), 10);
    REQUIRE(covers.size() == 1);
    CHECK(psi_full(p, p, 10) == psi_proxy(p, covers[0]).psi);
}

TEST_CASE("psi_full cap error advises the proxy") {
    CHECK_THROWS_WITH_AS(psi_full(fixtures::psi_truth(4), fixtures::psi_advice(4), 2),
                         doctest::Contains("psi_proxy"), CapExceededError);
}

TEST_CASE("psi is asymmetric on the fixture") {
    const int nz = 4;
    int forward = psi_full(fixtures::psi_truth(nz), fixtures::psi_advice(nz), 100);
    int backward = psi_full(fixtures::psi_advice(nz), fixtures::psi_truth(nz), 100);
    CHECK(backward >= forward + (nz - 2));
}

TEST_CASE("psi bounds") {
    Rng rng(97);
    for (int trial = 0; trial < 20; ++trial) {
        Dag truth = fixtures::random_moral_dag(7, rng);
        Dag advice = fixtures::random_mec_member(truth, rng);
        int psi = psi_proxy(truth, verifying_set_atomic(advice)).psi;
        CHECK(psi >= 0);
        CHECK(psi <= truth.num_nodes());
    }
}

TEST_CASE("h is at most the diameter and rho grows with the radius") {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        Dag truth = fixtures::random_moral_dag(7, rng);
        Dag advice = fixtures::random_mec_member(truth, rng);
        auto vtilde = verifying_set_atomic(advice);
        if (vtilde.empty()) continue;
        auto q = psi_proxy(truth, vtilde);

        UGraph skel = skeleton(truth.pdag());
        int diameter = 0;
        for (const auto& v : skel.nodes()) {
            auto d2 = bfs_distances(skel.pdag(), detail::names_to_indices(skel.pdag(), {v}));
            for (int d : d2) diameter = std::max(diameter, d);
        }
        CHECK(q.h <= diameter);
        for (size_t i = 1; i < q.rho_by_radius.size(); ++i)
            CHECK(q.rho_by_radius[i].second >= q.rho_by_radius[i - 1].second);
    }
}

TEST_CASE("intervening the advice set then searching its h-ball fully orients") {
    Rng rng(103);
    for (int trial = 0; trial < 15; ++trial) {
        Dag truth = fixtures::random_moral_dag(8, rng);
        Dag advice = fixtures::random_mec_member(truth, rng);
        auto vtilde = verifying_set_atomic(advice);
        if (vtilde.empty()) continue;
        int h = min_hop_coverage(truth, vtilde);
        Oracle oracle(truth);
        oracle.intervene(InterventionSet::atomic(vtilde));
        auto ball = hop_neighborhood(skeleton(truth.pdag()), vtilde, h);
        subset_search(oracle, ball, 1);
        CHECK(oracle.is_fully_oriented());
    }
}

TEST_CASE("extend_mpdag of the fig1 MPDAG keeps the required arcs") {
    Dag ext = extend_mpdag(fixtures::fig1_mpdag());
    CHECK(ext.pdag().has_arc("B", "A"));
    CHECK(ext.pdag().has_arc("B", "D"));
    CHECK(ext.pdag().has_arc("A", "C"));
    CHECK(same_mec(ext, fixtures::fig1_truth()));
}

TEST_CASE("extend_mpdag is the identity on a full DAG") {
    CHECK(extend_mpdag(fixtures::fig1_truth().pdag()) == fixtures::fig1_truth());
}

TEST_CASE("extend_mpdag of an undirected P3 lands in its MEC") {
    Pdag p({"a", "b", "c"});
    p.add_edge("a", "b");
    p.add_edge("b", "c");
    Dag ext = extend_mpdag(p);
    auto members = enumerate_mec(p, 10);
    CHECK(std::count(members.begin(), members.end(), ext) == 1);
}

TEST_CASE("extend_mpdag rejects inconsistent input") {
    Pdag g({"a", "b", "c", "d"});
    g.add_arc("c", "a");
    g.add_arc("d", "b");
    g.add_edge("a", "b");
    CHECK_THROWS_AS(extend_mpdag(g), GraphError);
}
