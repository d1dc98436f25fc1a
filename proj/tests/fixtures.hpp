#pragma once

#include <string>
#include <vector>

#include "causalsearch/advice.hpp"
#include "causalsearch/experiment.hpp"
#include "causalsearch/graph.hpp"
#include "causalsearch/mec.hpp"
#include "causalsearch/rng.hpp"

namespace fixtures {

using namespace causalsearch;

// Six-node running example: A->B, A->C, A->D, B->D, C->E, D->E, D->F, E->F.
inline Dag fig1_truth() {
    Pdag g({"A", "B", "C", "D", "E", "F"});
    g.add_arc("A", "B");
    g.add_arc("A", "C");
    g.add_arc("A", "D");
    g.add_arc("B", "D");
    g.add_arc("C", "E");
    g.add_arc("D", "E");
    g.add_arc("D", "F");
    g.add_arc("E", "F");
    return Dag(std::move(g));
}

inline Pdag fig1_essential() {
    Pdag g({"A", "B", "C", "D", "E", "F"});
    g.add_edge("A", "B");
    g.add_edge("A", "C");
    g.add_edge("A", "D");
    g.add_edge("B", "D");
    g.add_arc("C", "E");
    g.add_arc("D", "E");
    g.add_arc("D", "F");
    g.add_arc("E", "F");
    return g;
}

// Figure-1(IV) MPDAG: required arcs B->A and B->D added, Meek-closed.
inline Pdag fig1_mpdag() {
    Pdag g({"A", "B", "C", "D", "E", "F"});
    g.add_arc("B", "A");
    g.add_arc("A", "C");
    g.add_edge("A", "D");
    g.add_arc("B", "D");
    g.add_arc("C", "E");
    g.add_arc("D", "E");
    g.add_arc("D", "F");
    g.add_arc("E", "F");
    return g;
}

// Tightness pair: same MEC, nu1(G1)=2 and nu1(G2)=1.
inline Dag tight_g1() {
    Pdag g({"a", "b", "c", "d"});
    g.add_arc("b", "a");
    g.add_arc("c", "a");
    g.add_arc("c", "b");
    g.add_arc("c", "d");
    return Dag(std::move(g));
}

inline Dag tight_g2() {
    Pdag g({"a", "b", "c", "d"});
    g.add_arc("b", "a");
    g.add_arc("c", "a");
    g.add_arc("b", "c");
    g.add_arc("c", "d");
    return Dag(std::move(g));
}

inline std::vector<NodeId> z_names(int nz) {
    std::vector<NodeId> out;
    for (int i = 1; i <= nz; ++i) out.push_back("z" + std::to_string(i));
    return out;
}

// Quality-measure example on nz+5 nodes. Truth: everything points into a/b
// and down the z-chain (z_{i+1} -> z_i), with c -> z_nz.
inline Dag psi_truth(int nz = 4) {
    std::vector<NodeId> nodes = {"a", "b", "c", "d", "e"};
    for (const auto& z : z_names(nz)) nodes.push_back(z);
    Pdag g(std::move(nodes));
    g.add_arc("b", "a");
    g.add_arc("c", "a");
    g.add_arc("c", "b");
    g.add_arc("d", "c");
    g.add_arc("e", "c");
    g.add_arc("e", "d");
    for (int i = nz; i >= 2; --i) g.add_arc("z" + std::to_string(i), "z" + std::to_string(i - 1));
    g.add_arc("c", "z" + std::to_string(nz));
    return Dag(std::move(g));
}

// Advice in the same MEC: c -> d, c -> e and the z-chain reversed.
inline Dag psi_advice(int nz = 4) {
    std::vector<NodeId> nodes = {"a", "b", "c", "d", "e"};
    for (const auto& z : z_names(nz)) nodes.push_back(z);
    Pdag g(std::move(nodes));
    g.add_arc("b", "a");
    g.add_arc("c", "a");
    g.add_arc("c", "b");
    g.add_arc("c", "d");
    g.add_arc("c", "e");
    g.add_arc("e", "d");
    for (int i = 1; i < nz; ++i) g.add_arc("z" + std::to_string(i), "z" + std::to_string(i + 1));
    g.add_arc("z" + std::to_string(nz), "c");
    return Dag(std::move(g));
}

// Star with a two-hop handle: v2 -> v1, v2 -> v3, v3 -> spokes v4..vn.
inline Dag star_truth(int n = 8) {
    std::vector<NodeId> nodes;
    for (int i = 1; i <= n; ++i) nodes.push_back("v" + std::to_string(i));
    Pdag g(std::move(nodes));
    g.add_arc("v2", "v1");
    g.add_arc("v2", "v3");
    for (int i = 4; i <= n; ++i) g.add_arc("v3", "v" + std::to_string(i));
    return Dag(std::move(g));
}

inline Dag star_advice(int n = 8) {
    std::vector<NodeId> nodes;
    for (int i = 1; i <= n; ++i) nodes.push_back("v" + std::to_string(i));
    Pdag g(std::move(nodes));
    g.add_arc("v1", "v2");
    g.add_arc("v2", "v3");
    for (int i = 4; i <= n; ++i) g.add_arc("v3", "v" + std::to_string(i));
    return Dag(std::move(g));
}

inline std::vector<NodeId> path_names(int n) {
    size_t width = std::to_string(n).size();
    std::vector<NodeId> names;
    for (int i = 1; i <= n; ++i) {
        std::string digits = std::to_string(i);
        names.push_back("v" + std::string(width - digits.size(), '0') + digits);
    }
    return names;
}

// Directed path on n nodes rooted at position root (1-based): arcs point away
// from the root. position_of[i] gives the node name at path position i+1.
inline Dag path_dag(int n, int root, const std::vector<NodeId>& position_names) {
    Pdag g(position_names);
    for (int i = root; i >= 2; --i) g.add_arc(position_names[size_t(i - 1)], position_names[size_t(i - 2)]);
    for (int i = root; i < n; ++i) g.add_arc(position_names[size_t(i - 1)], position_names[size_t(i)]);
    return Dag(std::move(g));
}

inline Dag path_dag(int n, int root) { return path_dag(n, root, path_names(n)); }

// Node names assigned to path positions by a seeded shuffle; tie-breaking
// then varies across seeds while the structure stays a path.
inline std::vector<NodeId> shuffled_path_names(int n, std::uint64_t seed) {
    auto names = path_names(n);
    Rng rng(seed);
    rng.shuffle(names);
    return names;
}

inline Dag chain3() {
    Pdag g({"a", "b", "c"});
    g.add_arc("a", "b");
    g.add_arc("b", "c");
    return Dag(std::move(g));
}

// Random connected chordal skeleton with generator kind cycled by the rng.
inline UGraph random_chordal(int n, Rng& rng) {
    auto kind = static_cast<ChordalKind>(rng.below(3));
    return gen_chordal(kind, n, rng.next());
}

// Random moral DAG: deterministic extension of a random chordal skeleton,
// randomized by a covered-edge-reversal walk.
inline Dag random_moral_dag(int n, Rng& rng) {
    UGraph skel = random_chordal(n, rng);
    Dag g = extend_mpdag(skel.pdag());
    const int steps = 10 * n;
    for (int s = 0; s < steps; ++s) {
        auto covered = covered_edges(g).arcs;
        if (covered.empty()) break;
        g = reverse_covered_edge(g, covered[size_t(rng.below(covered.size()))]);
    }
    return g;
}

// Random same-MEC companion of g.
inline Dag random_mec_member(const Dag& g, Rng& rng) {
    Dag out = g;
    const int steps = 10 * g.num_nodes();
    for (int s = 0; s < steps; ++s) {
        auto covered = covered_edges(out).arcs;
        if (covered.empty()) break;
        out = reverse_covered_edge(out, covered[size_t(rng.below(covered.size()))]);
    }
    return out;
}

}  // namespace fixtures
