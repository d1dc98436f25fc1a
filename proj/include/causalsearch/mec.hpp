#pragma once

#include <set>
#include <vector>

#include "causalsearch/graph.hpp"

namespace causalsearch {

/// The covered edges of a DAG. The edge-induced subgraph is a forest and
/// every node is the head of at most one covered arc.
struct CoveredForest {
    std::vector<Arc> arcs;  // sorted
    bool contains(const Arc& a) const;
};

/// Vertex-disjoint set of arcs.
struct Matching {
    std::vector<Arc> arcs;  // sorted
};

/// Essential graph of g: v-structures oriented in skel(g), then Meek closure.
Pdag essential_graph(const Dag& g);

/// True iff same skeleton and same v-structures. Node sets must match.
bool same_mec(const Dag& g1, const Dag& g2);

/// All consistent extensions of e that add no new v-structures: DAGs with
/// e's skeleton, containing e's arcs, acyclic, v-structures equal to those
/// implied by e's arcs. Deterministic output (lexicographic by arc set).
/// Throws CapExceededError once more than cap members exist.
std::vector<Dag> enumerate_mec(const Pdag& e, long long cap);

/// Arcs x->y with Pa(x) = Pa(y) \ {x}; validated against the forest and
/// head-uniqueness invariants.
CoveredForest covered_edges(const Dag& g);

bool is_covered(const Dag& g, int tail, int head);

/// Reverses one covered edge; the result stays in the MEC.
Dag reverse_covered_edge(const Dag& g, const Arc& arc);

/// Sequence of covered-edge reversals transforming gs into gt. At each step
/// the ordering is the deterministic topological order, y is the min-rank
/// vertex with differing parents and x its max-rank differing parent.
std::vector<Arc> chickering_sequence(const Dag& gs, const Dag& gt);

/// Conditional-root-greedy maximal matching on the covered edges: repeatedly
/// take the min-rank tail x and the head minimizing rank(y) + n^2 * [x->y in s].
Matching crg_matching(const Dag& g, const Ordering& pi, const std::set<Arc>& s);

}  // namespace causalsearch
