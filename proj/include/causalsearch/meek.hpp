#pragma once

#include <vector>

#include "causalsearch/graph.hpp"

namespace causalsearch {

struct RuleStep {
    int rule;  // 1..4
    Arc oriented;
    bool operator==(const RuleStep&) const = default;
};

/// Fixpoint of Meek rules R1-R4. The input must have a consistent DAG
/// extension; when two rules would orient the same edge both ways the
/// precondition was violated and a GraphError is raised.
Pdag meek_closure(const Pdag& g);

/// Same fixpoint, but returns the ordered rule applications. Replaying the
/// trace on g yields meek_closure(g). Scan order: undirected pairs in NodeId
/// order, rules R1..R4, low->high direction before high->low.
std::vector<RuleStep> rule_trace(const Pdag& g);

}  // namespace causalsearch
