#pragma once

#include <vector>

#include "causalsearch/graph.hpp"
#include "causalsearch/intervention.hpp"
#include "causalsearch/oracle.hpp"

namespace causalsearch {

struct SearchRound {
    int index = 0;            // i
    int radius = 0;           // r(i)
    long long relevant = 0;   // n_i at the trigger
    long long c_size = 0;     // interventions used by the inner call on N^{r-1}
    long long c_prime_size = 0;  // interventions used on N^r (0 when skipped)
    bool safeguard = false;      // forced full-graph pass without a trigger
};

struct SearchReport {
    InterventionSet interventions;   // submission order
    std::vector<SearchRound> rounds; // advice-search bookkeeping; empty otherwise
    long long total = 0;             // ledger delta on the oracle
    Pdag final_graph;
};

/// Orients every edge of the node-induced subgraph on target. Each round
/// takes a half-clique separator of every chain component of the induced
/// subgraph that still holds relevant nodes, so the largest such component
/// halves per round. Interventions are atomic for k=1 and labelling-scheme
/// partitions of the separators for k>1.
SearchReport subset_search(Oracle& oracle, const std::vector<NodeId>& target, int k);

/// subset_search on all nodes; fully orients the essential graph.
SearchReport full_search(Oracle& oracle, int k);

/// Advice-guided adaptive search. Intervenes on a verifying set of the
/// advice first, then grows a hop radius around it, invoking subset_search
/// on N^{r-1} and N^r whenever the relevant-node count has squared.
SearchReport advice_search(Oracle& oracle, const Dag& advice, int k);

/// Partial advice: extends the MPDAG to a full DAG deterministically and
/// runs advice_search on it.
SearchReport advice_search_mpdag(Oracle& oracle, const Pdag& mpdag, int k);

}  // namespace causalsearch
