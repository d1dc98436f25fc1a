#include "causalsearch/oracle.hpp"

#include "causalsearch/chordal.hpp"
#include "causalsearch/mec.hpp"
#include "causalsearch/meek.hpp"

namespace causalsearch {

Oracle::Oracle(Dag truth) : truth_(std::move(truth)) {
    applied_.k = 1;
    current_ = essential_graph(truth_);
    validate_chain_components();
}

void Oracle::intervene(const InterventionSet& batch) {
    const Pdag& tp = truth_.pdag();
    std::vector<std::vector<int>> subsets;
    for (const auto& s : batch.sets) {
        std::vector<int> idx;
        for (const auto& v : s) idx.push_back(tp.index_of(v));  // throws on unknown node
        if (static_cast<int>(idx.size()) > batch.k)
            throw GraphError("oversized intervention subset");
        subsets.push_back(std::move(idx));
    }

    Pdag next = current_;
    const int n = next.num_nodes();
    std::vector<char> in_s(static_cast<size_t>(n), 0);
    for (const auto& s : subsets) {
        std::fill(in_s.begin(), in_s.end(), 0);
        for (int v : s) in_s[static_cast<size_t>(v)] = 1;
        // every still-undirected edge cut by (S, V\S) gets its truth orientation
        for (auto [u, v] : next.edge_indices()) {
            if (in_s[static_cast<size_t>(u)] == in_s[static_cast<size_t>(v)]) continue;
            if (tp.has_arc(u, v)) next.orient_edge(u, v);
            else next.orient_edge(v, u);
        }
    }
    next = meek_closure(next);

    for (auto [u, v] : current_.arc_indices())
        if (!next.has_arc(u, v)) throw GraphError("oracle lost a previously revealed arc");

    current_ = std::move(next);
    for (const auto& s : batch.sets) applied_.sets.push_back(s);
    applied_.k = std::max(applied_.k, batch.k);
    total_ += batch.size();
    batch_sizes_.push_back(batch.size());
    validate_chain_components();
}

bool Oracle::is_fully_oriented() const {
    if (current_.num_edges() != 0) return false;
    if (!(current_ == truth_.pdag()))
        throw GraphError("oracle state fully oriented but differs from the ground truth");
    return true;
}

std::vector<int> Oracle::relevant_node_indices(const std::vector<int>& subset_sorted) const {
    std::vector<char> in(static_cast<size_t>(current_.num_nodes()), 0);
    for (int v : subset_sorted) in[static_cast<size_t>(v)] = 1;
    std::vector<char> hit(static_cast<size_t>(current_.num_nodes()), 0);
    for (auto [u, v] : current_.edge_indices()) {
        if (in[static_cast<size_t>(u)] && in[static_cast<size_t>(v)]) {
            hit[static_cast<size_t>(u)] = 1;
            hit[static_cast<size_t>(v)] = 1;
        }
    }
    std::vector<int> out;
    for (int v = 0; v < current_.num_nodes(); ++v)
        if (hit[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<NodeId> Oracle::relevant_nodes(const std::vector<NodeId>& subset) const {
    auto idx = detail::names_to_indices(current_, subset);
    return detail::indices_to_names(current_, relevant_node_indices(idx));
}

void Oracle::validate_chain_components() {
    for (const auto& comp : chain_component_indices(current_)) {
        if (comp.size() < 3) continue;  // a pair cannot hold an internal arc or a chordless cycle
        Pdag sub = induced_subgraph(current_, comp);
        if (sub.num_arcs() != 0)
            throw GraphError("chain component contains an internal arc (not a chain graph)");
        if (!is_chordal(UGraph(std::move(sub))))
            throw GraphError("interventional essential graph has a non-chordal chain component");
        ++chordality_checks_;
    }
}

Dag residual_dag(const Dag& g, const InterventionSet& interventions) {
    Oracle oracle(g);
    oracle.intervene(interventions);
    const Pdag& revealed = oracle.current();
    Pdag out(g.nodes());
    for (auto [u, v] : g.pdag().arc_indices())
        if (!revealed.has_arc(u, v)) out.add_arc(u, v);
    return Dag(std::move(out));
}

}  // namespace causalsearch
