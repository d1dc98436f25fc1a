#include "causalsearch/search.hpp"

#include <deque>

#include "causalsearch/advice.hpp"
#include "causalsearch/chordal.hpp"
#include "causalsearch/mec.hpp"
#include "causalsearch/verification.hpp"

namespace causalsearch {

namespace {

// Chain components of current[target] that still contain an undirected edge.
std::vector<std::vector<int>> relevant_components(const Pdag& current, const std::vector<int>& target) {
    const int n = current.num_nodes();
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (int v : target) in[static_cast<size_t>(v)] = 1;

    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> comps;
    for (int s : target) {
        if (comp[s] != -1) continue;
        std::vector<int> members;
        std::deque<int> q = {s};
        comp[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            members.push_back(v);
            for (int u : current.undirected_neighbors_of(v)) {
                if (in[static_cast<size_t>(u)] && comp[u] == -1) {
                    comp[u] = 1;
                    q.push_back(u);
                }
            }
        }
        if (members.size() >= 2) {
            std::sort(members.begin(), members.end());
            comps.push_back(std::move(members));
        }
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

UGraph undirected_part(const Pdag& g, const std::vector<int>& nodes) {
    Pdag sub = induced_subgraph(g, nodes);
    Pdag u(sub.nodes());
    for (auto [a, b] : sub.edge_indices()) u.add_edge(a, b);
    return UGraph(std::move(u));
}

}  // namespace

SearchReport subset_search(Oracle& oracle, const std::vector<NodeId>& target, int k) {
    if (k < 1) throw GraphError("subset_search: k must be >= 1");
    auto target_idx = detail::names_to_indices(oracle.current(), target);
    const long long ledger_before = oracle.interventions_used();

    SearchReport report;
    report.interventions.k = k;
    while (true) {
        auto rel = oracle.relevant_node_indices(target_idx);
        if (rel.empty()) break;
        std::vector<std::vector<NodeId>> batch;
        for (const auto& comp : relevant_components(oracle.current(), target_idx)) {
            auto separator = half_clique_separator(undirected_part(oracle.current(), comp));
            if (k == 1) {
                for (const auto& v : separator) batch.push_back({v});
            } else {
                for (auto& s : bounded_partition(separator, k).sets) batch.push_back(std::move(s));
            }
        }
        InterventionSet round(k, std::move(batch));
        oracle.intervene(round);
        report.interventions.append(round);
    }
    report.total = oracle.interventions_used() - ledger_before;
    report.final_graph = oracle.current();
    return report;
}

SearchReport full_search(Oracle& oracle, int k) {
    auto report = subset_search(oracle, oracle.current().nodes(), k);
    if (!oracle.is_fully_oriented()) throw GraphError("full_search left undirected edges");
    return report;
}

SearchReport advice_search(Oracle& oracle, const Dag& advice, int k) {
    if (k < 1) throw GraphError("advice_search: k must be >= 1");
    if (!(essential_graph(advice) == oracle.current()))
        throw GraphError("advice_search: advice is inconsistent with the observational essential graph");

    const std::vector<NodeId> vtilde = verifying_set_atomic(advice);
    const UGraph skel = skeleton(oracle.current());
    const long long ledger_before = oracle.interventions_used();

    SearchReport report;
    report.interventions.k = k;

    InterventionSet initial = (k == 1) ? InterventionSet::atomic(vtilde) : bounded_partition(vtilde, k);
    oracle.intervene(initial);
    report.interventions.append(initial);

    // Radii live on the observational skeleton, which is public.
    std::vector<int> dist;
    int max_dist = 0;
    if (!vtilde.empty()) {
        dist = bfs_distances(skel.pdag(), detail::names_to_indices(skel.pdag(), vtilde));
        for (int d : dist) max_dist = std::max(max_dist, d);
    }
    auto ball = [&](int r) {
        std::vector<int> out;
        for (size_t v = 0; v < dist.size(); ++v)
            if (dist[v] >= 0 && dist[v] <= r) out.push_back(static_cast<int>(v));
        return out;
    };

    int r = 0;
    int round_index = 0;
    long long n_i = 2;
    while (!oracle.is_fully_oriented()) {
        auto neighborhood = ball(r);
        long long rho = static_cast<long long>(oracle.relevant_node_indices(neighborhood).size());
        if (rho >= n_i * n_i) {
            ++round_index;
            if (r < 1) throw GraphError("advice_search: trigger fired at radius 0");
            n_i = rho;
            SearchRound round;
            round.index = round_index;
            round.radius = r;
            round.relevant = rho;
            auto inner = subset_search(oracle, detail::indices_to_names(oracle.current(), ball(r - 1)), k);
            round.c_size = inner.total;
            report.interventions.append(inner.interventions);
            if (!oracle.is_fully_oriented()) {
                auto outer = subset_search(oracle, detail::indices_to_names(oracle.current(), neighborhood), k);
                round.c_prime_size = outer.total;
                report.interventions.append(outer.interventions);
            }
            report.rounds.push_back(round);
        } else if (r >= max_dist) {
            // The neighborhood has stopped growing without a trigger; the
            // squaring condition can never fire again. Finish on all nodes.
            SearchRound round;
            round.index = ++round_index;
            round.radius = r;
            round.relevant = rho;
            round.safeguard = true;
            auto fin = subset_search(oracle, oracle.current().nodes(), k);
            round.c_size = fin.total;
            report.interventions.append(fin.interventions);
            report.rounds.push_back(round);
            break;
        }
        ++r;
    }

    if (!oracle.is_fully_oriented()) throw GraphError("advice_search left undirected edges");
    report.total = oracle.interventions_used() - ledger_before;
    report.final_graph = oracle.current();
    return report;
}

SearchReport advice_search_mpdag(Oracle& oracle, const Pdag& mpdag, int k) {
    return advice_search(oracle, extend_mpdag(mpdag), k);
}

}  // namespace causalsearch
