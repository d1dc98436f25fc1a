#pragma once

#include <optional>
#include <vector>

#include "causalsearch/graph.hpp"

namespace causalsearch {

struct ChordalityResult {
    bool chordal = false;
    Ordering order;                       // MCS visit order when chordal
    std::vector<NodeId> chordless_cycle;  // certificate (length >= 4) otherwise
};

/// Maximum-cardinality search with smallest-NodeId tie-breaking. The visit
/// order reversed is a perfect elimination ordering iff the graph is chordal;
/// otherwise a certifying chordless cycle is returned.
ChordalityResult peo_mcs(const UGraph& g);

bool is_chordal(const UGraph& g);

/// Maximal cliques of a chordal graph, each sorted, list sorted.
std::vector<std::vector<NodeId>> maximal_cliques(const UGraph& g);

/// A clique whose removal leaves every connected component with at most
/// ceil(|V|/2) vertices. Requires a connected chordal graph on >= 2 nodes.
/// Deterministic: among candidates the smallest max-component wins, then the
/// smallest separator, then the lexicographically smallest node set.
std::vector<NodeId> half_clique_separator(const UGraph& g);

}  // namespace causalsearch
