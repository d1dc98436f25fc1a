#pragma once

#include <vector>

#include "causalsearch/graph.hpp"
#include "causalsearch/intervention.hpp"

namespace causalsearch {

/// Simulates ideal interventions against a hidden ground-truth DAG. Search
/// code only sees the interventional essential graph and the query methods
/// below; the truth itself stays private. Every intervene() recomputes the
/// Meek closure over (previous arcs + all newly cut edge orientations) and
/// verifies that the chain components of the result are chordal.
class Oracle {
public:
    explicit Oracle(Dag truth);

    /// Interventional essential graph for everything applied so far.
    const Pdag& current() const { return current_; }

    void intervene(const InterventionSet& batch);

    std::vector<Arc> revealed_arcs() const { return current_.arcs(); }
    bool is_fully_oriented() const;

    /// Nodes of the subset incident to an undirected edge of current[subset].
    std::vector<NodeId> relevant_nodes(const std::vector<NodeId>& subset) const;
    std::vector<int> relevant_node_indices(const std::vector<int>& subset_sorted) const;

    /// Number of subset-interventions submitted (observational state is zero).
    long long interventions_used() const { return total_; }
    const std::vector<int>& ledger() const { return batch_sizes_; }

    const InterventionSet& applied() const { return applied_; }

    /// Chain components checked for chordality so far (every state is checked).
    long long chordality_checks() const { return chordality_checks_; }

private:
    void validate_chain_components();

    Dag truth_;
    InterventionSet applied_;
    Pdag current_;
    long long total_ = 0;
    std::vector<int> batch_sizes_;
    long long chordality_checks_ = 0;
};

/// Sub-DAG of g on the arcs left unoriented by the interventions (all nodes kept).
Dag residual_dag(const Dag& g, const InterventionSet& interventions);

}  // namespace causalsearch
