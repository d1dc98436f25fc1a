#include "causalsearch/chordal.hpp"

#include <deque>
#include <set>

namespace causalsearch {

namespace {

// MCS visit order (indices) with smallest-index tie-breaking.
std::vector<int> mcs_order(const Pdag& g) {
    const int n = g.num_nodes();
    std::vector<int> weight(n, 0);
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[static_cast<size_t>(v)]) continue;
            if (best == -1 || weight[v] > weight[best]) best = v;  // ties keep smaller index
        }
        visited[static_cast<size_t>(best)] = 1;
        order.push_back(best);
        for (int u : g.undirected_neighbors_of(best))
            if (!visited[static_cast<size_t>(u)]) weight[u]++;
    }
    return order;
}

// Earlier-visited neighbors of each vertex under the given visit order.
std::vector<std::vector<int>> earlier_neighbors(const Pdag& g, const std::vector<int>& order) {
    const int n = g.num_nodes();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[static_cast<size_t>(i)]] = i;
    std::vector<std::vector<int>> out(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int u : g.undirected_neighbors_of(v))
            if (pos[u] < pos[v]) out[static_cast<size_t>(v)].push_back(u);
    return out;
}

// Shortest u-w path avoiding N[v] \ {u,w}; with v it closes a chordless cycle.
std::optional<std::vector<int>> chordless_path(const Pdag& g, int v, int u, int w) {
    const int n = g.num_nodes();
    std::vector<char> blocked(static_cast<size_t>(n), 0);
    blocked[static_cast<size_t>(v)] = 1;
    for (int x : g.undirected_neighbors_of(v)) blocked[static_cast<size_t>(x)] = 1;
    blocked[static_cast<size_t>(u)] = 0;
    blocked[static_cast<size_t>(w)] = 0;
    std::vector<int> prev(n, -2);
    std::deque<int> q = {u};
    prev[u] = -1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == w) break;
        for (int y : g.undirected_neighbors_of(x)) {
            if (blocked[static_cast<size_t>(y)] || prev[y] != -2) continue;
            prev[y] = x;
            q.push_back(y);
        }
    }
    if (prev[w] == -2) return std::nullopt;
    std::vector<int> path;
    for (int x = w; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<NodeId> find_chordless_cycle(const Pdag& g) {
    const int n = g.num_nodes();
    for (int v = 0; v < n; ++v) {
        auto nbrs = g.undirected_neighbors_of(v);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.adjacent(nbrs[i], nbrs[j])) continue;
                if (auto path = chordless_path(g, v, nbrs[i], nbrs[j])) {
                    std::vector<NodeId> cyc = {g.name(v)};
                    for (int x : *path) cyc.push_back(g.name(x));
                    return cyc;
                }
            }
        }
    }
    return {};
}

std::vector<std::vector<int>> components_after_removal(const Pdag& g, const std::vector<char>& removed) {
    const int n = g.num_nodes();
    std::vector<char> seen = removed;
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        std::deque<int> q = {s};
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (int u : g.undirected_neighbors_of(v)) {
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    q.push_back(u);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_clique(const Pdag& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_connected(const Pdag& g) {
    if (g.num_nodes() == 0) return true;
    std::vector<char> removed(static_cast<size_t>(g.num_nodes()), 0);
    return components_after_removal(g, removed).size() == 1;
}

}  // namespace

ChordalityResult peo_mcs(const UGraph& g) {
    const Pdag& p = g.pdag();
    auto order = mcs_order(p);
    auto earlier = earlier_neighbors(p, order);
    for (int v = 0; v < p.num_nodes(); ++v) {
        if (!is_clique(p, earlier[static_cast<size_t>(v)])) {
            ChordalityResult r;
            r.chordal = false;
            r.chordless_cycle = find_chordless_cycle(p);
            return r;
        }
    }
    ChordalityResult r;
    r.chordal = true;
    r.order = Ordering(detail::indices_to_names(p, order));
    return r;
}

bool is_chordal(const UGraph& g) { return peo_mcs(g).chordal; }

std::vector<std::vector<NodeId>> maximal_cliques(const UGraph& g) {
    const Pdag& p = g.pdag();
    auto order = mcs_order(p);
    auto earlier = earlier_neighbors(p, order);
    if (!peo_mcs(g).chordal) throw GraphError("maximal_cliques requires a chordal graph");

    std::vector<std::vector<int>> cliques;
    for (int v = 0; v < p.num_nodes(); ++v) {
        auto c = earlier[static_cast<size_t>(v)];
        c.push_back(v);
        std::sort(c.begin(), c.end());
        cliques.push_back(std::move(c));
    }
    std::sort(cliques.begin(), cliques.end());
    cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());

    std::vector<std::vector<NodeId>> out;
    for (size_t i = 0; i < cliques.size(); ++i) {
        bool contained = false;
        for (size_t j = 0; j < cliques.size() && !contained; ++j) {
            if (i == j || cliques[j].size() <= cliques[i].size()) continue;
            contained = std::includes(cliques[j].begin(), cliques[j].end(),
                                      cliques[i].begin(), cliques[i].end());
        }
        if (!contained) out.push_back(detail::indices_to_names(p, cliques[i]));
    }
    return out;
}

std::vector<NodeId> half_clique_separator(const UGraph& g) {
    const Pdag& p = g.pdag();
    const int n = p.num_nodes();
    if (n < 2) throw GraphError("separator needs at least 2 nodes");
    if (!is_connected(p)) throw GraphError("separator requires a connected graph");
    auto chordality = peo_mcs(g);
    if (!chordality.chordal) throw GraphError("separator requires a chordal graph");

    auto order = mcs_order(p);
    auto earlier = earlier_neighbors(p, order);

    // Candidates: maximal cliques plus MCS prefix-neighborhood separators.
    std::set<std::vector<int>> candidates;
    for (int v = 0; v < n; ++v) {
        auto c = earlier[static_cast<size_t>(v)];
        if (!c.empty()) {
            std::sort(c.begin(), c.end());
            candidates.insert(c);
        }
        c.push_back(v);
        std::sort(c.begin(), c.end());
        if (static_cast<int>(c.size()) < n) candidates.insert(std::move(c));
    }

    const int bound = (n + 1) / 2;
    std::vector<int> best;
    int best_max_comp = -1;
    for (const auto& cand : candidates) {
        std::vector<char> removed(static_cast<size_t>(n), 0);
        for (int v : cand) removed[static_cast<size_t>(v)] = 1;
        int max_comp = 0;
        for (const auto& comp : components_after_removal(p, removed))
            max_comp = std::max(max_comp, static_cast<int>(comp.size()));
        if (max_comp > bound) continue;
        bool better = best.empty() || max_comp < best_max_comp ||
                      (max_comp == best_max_comp && cand.size() < best.size()) ||
                      (max_comp == best_max_comp && cand.size() == best.size() && cand < best);
        if (better) {
            best = cand;
            best_max_comp = max_comp;
        }
    }
    if (best.empty()) throw GraphError("no half clique separator found");  // cannot happen on chordal inputs

    // Post-hoc verification on every call: clique plus component-size bound.
    if (!is_clique(p, best)) throw GraphError("separator is not a clique");
    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (int v : best) removed[static_cast<size_t>(v)] = 1;
    for (const auto& comp : components_after_removal(p, removed))
        if (static_cast<int>(comp.size()) > bound) throw GraphError("separator leaves an oversized component");

    return detail::indices_to_names(p, best);
}

}  // namespace causalsearch
