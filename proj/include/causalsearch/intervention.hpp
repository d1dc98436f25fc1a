#pragma once

#include <vector>

#include "causalsearch/graph.hpp"

namespace causalsearch {

/// Ordered collection of node subsets, each of size <= k.
struct InterventionSet {
    InterventionSet() = default;
    InterventionSet(int bound, std::vector<std::vector<NodeId>> subsets) : k(bound), sets(std::move(subsets)) {
        if (k < 1) throw GraphError("intervention bound k must be >= 1");
        for (auto& s : sets) {
            if (s.empty()) throw GraphError("empty intervention subset");
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (static_cast<int>(s.size()) > k)
                throw GraphError("intervention subset of size " + std::to_string(s.size()) +
                                 " exceeds bound k=" + std::to_string(k));
        }
    }

    static InterventionSet atomic(const std::vector<NodeId>& nodes) {
        std::vector<std::vector<NodeId>> sets;
        sets.reserve(nodes.size());
        for (const auto& v : nodes) sets.push_back({v});
        return InterventionSet(1, std::move(sets));
    }

    int size() const { return static_cast<int>(sets.size()); }
    bool empty() const { return sets.empty(); }
    void append(const InterventionSet& other) {
        for (const auto& s : other.sets) sets.push_back(s);
    }

    int k = 1;
    std::vector<std::vector<NodeId>> sets;
};

}  // namespace causalsearch
