#pragma once

#include <vector>

#include "causalsearch/graph.hpp"
#include "causalsearch/intervention.hpp"
#include "causalsearch/mec.hpp"

namespace causalsearch {

/// Separating-system labels over the alphabet {0} u [a]: all labels distinct,
/// every integer letter used at most ceil(n/a) times per digit, and each
/// element keyed by a nonzero letter in the first digit.
struct LabelTable {
    int n = 0;
    int k = 0;
    int a = 0;
    int ell = 0;
    std::vector<std::vector<int>> labels;  // labels[i] has ell digits

    void check() const;  // throws when an invariant fails
};

/// Exact minimum vertex cover of the covered forest via tree DP. Among the
/// minimum covers, the lexicographically smallest node set is returned.
std::vector<NodeId> min_vertex_cover_forest(const CoveredForest& f);

/// Every minimum vertex cover of the forest (at most cap, else error).
std::vector<std::vector<NodeId>> all_min_vertex_covers(const CoveredForest& f, long long cap);

int nu1(const Dag& g);
std::vector<NodeId> verifying_set_atomic(const Dag& g);

/// Lemma-1 labelling scheme. Requires k <= n/2 and a >= 2; ell = ceil(log_a n).
LabelTable separating_labels(int n, int k, int a);

/// Bounded-size verifying intervention set. For k=1 these are singletons over
/// the atomic verifying set; for k>1 the cover C is partitioned through
/// separating_labels with k' = max(1, min(k, |C|/2)) and a = ceil(|C|/k').
InterventionSet verifying_set_bounded(const Dag& g, int k);

/// Partitions an explicit node set the same way (used by the search engine
/// on separators and on the advice verifying set).
InterventionSet bounded_partition(std::vector<NodeId> nodes, int k);

}  // namespace causalsearch
