#pragma once

#include <vector>

#include "causalsearch/graph.hpp"

namespace causalsearch {

struct AdviceQuality {
    int h = 0;    // min-hop-coverage
    int psi = 0;  // relevant-node count at radius h after intervening the set
    std::vector<std::pair<int, int>> rho_by_radius;  // (r, rho) for r = 0..h
};

/// Smallest h such that every endpoint of the truth's covered edges lies in
/// the h-hop neighborhood of vtilde on the observational skeleton. Returns 0
/// when the truth has no covered edges.
int min_hop_coverage(const Dag& truth, const std::vector<NodeId>& vtilde);

/// Simulates intervening vtilde atomically on a fresh oracle and counts the
/// relevant nodes inside N^h(vtilde).
AdviceQuality psi_proxy(const Dag& truth, const std::vector<NodeId>& vtilde);

/// Maximum of psi_proxy over every minimum vertex cover of the advice's
/// covered forest (at most cap covers, else error recommending psi_proxy).
int psi_full(const Dag& truth, const Dag& advice, long long cap);

/// Deterministic consistent extension: repeatedly orient the smallest
/// unoriented pair (low->high when consistent, else high->low) and close
/// under Meek rules. Errors when no consistent extension exists.
Dag extend_mpdag(const Pdag& mpdag);

}  // namespace causalsearch
