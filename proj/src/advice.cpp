#include "causalsearch/advice.hpp"

#include "causalsearch/mec.hpp"
#include "causalsearch/meek.hpp"
#include "causalsearch/oracle.hpp"
#include "causalsearch/verification.hpp"

namespace causalsearch {

int min_hop_coverage(const Dag& truth, const std::vector<NodeId>& vtilde) {
    CoveredForest c = covered_edges(truth);
    if (c.arcs.empty()) return 0;
    if (vtilde.empty()) throw GraphError("min_hop_coverage: empty set cannot cover covered edges");

    UGraph skel = skeleton(essential_graph(truth));
    auto sources = detail::names_to_indices(skel.pdag(), vtilde);
    auto dist = bfs_distances(skel.pdag(), sources);
    int h = 0;
    for (const auto& [x, y] : c.arcs) {
        for (const NodeId& endpoint : {x, y}) {
            int d = dist[static_cast<size_t>(skel.pdag().index_of(endpoint))];
            if (d < 0)
                throw GraphError("min_hop_coverage: endpoint '" + endpoint + "' unreachable from the set");
            h = std::max(h, d);
        }
    }
    return h;
}

AdviceQuality psi_proxy(const Dag& truth, const std::vector<NodeId>& vtilde) {
    AdviceQuality q;
    q.h = min_hop_coverage(truth, vtilde);

    Oracle oracle(truth);
    if (!vtilde.empty()) oracle.intervene(InterventionSet::atomic(vtilde));

    UGraph skel = skeleton(truth.pdag());
    for (int r = 0; r <= q.h; ++r) {
        auto ball = hop_neighborhood(skel, vtilde, r);
        int rho = static_cast<int>(oracle.relevant_nodes(ball).size());
        q.rho_by_radius.emplace_back(r, rho);
    }
    q.psi = q.rho_by_radius.back().second;
    return q;
}

int psi_full(const Dag& truth, const Dag& advice, long long cap) {
    if (!same_mec(truth, advice)) throw GraphError("psi_full: advice is not in the truth's MEC");
    auto covers = all_min_vertex_covers(covered_edges(advice), cap);
    int best = 0;
    for (const auto& cover : covers) best = std::max(best, psi_proxy(truth, cover).psi);
    return best;
}

namespace {

bool consistent_candidate(const Pdag& closed, const std::vector<VStructure>& implied) {
    return arcs_acyclic(closed) && arc_v_structures(closed) == implied;
}

}  // namespace

Dag extend_mpdag(const Pdag& mpdag) {
    const auto implied = arc_v_structures(mpdag);
    Pdag g = meek_closure(mpdag);  // throws if rules already clash
    if (!consistent_candidate(g, implied))
        throw GraphError("extend_mpdag: input has no consistent extension");

    while (g.num_edges() > 0) {
        auto [u, v] = g.edge_indices().front();  // smallest pair
        bool oriented = false;
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            Pdag candidate = g;
            candidate.orient_edge(a, b);
            try {
                candidate = meek_closure(candidate);
            } catch (const GraphError&) {
                continue;
            }
            if (!consistent_candidate(candidate, implied)) continue;
            g = std::move(candidate);
            oriented = true;
            break;
        }
        if (!oriented) throw GraphError("extend_mpdag: no consistent extension");
    }
    return Dag(std::move(g));
}

}  // namespace causalsearch
