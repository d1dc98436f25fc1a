#include "causalsearch/mec.hpp"

#include <deque>
#include <functional>

#include "causalsearch/meek.hpp"

namespace causalsearch {

bool CoveredForest::contains(const Arc& a) const {
    return std::binary_search(arcs.begin(), arcs.end(), a);
}

Pdag essential_graph(const Dag& g) {
    const Pdag& p = g.pdag();
    const int n = p.num_nodes();
    Pdag e(p.nodes());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (p.adjacent(u, v)) e.add_edge(u, v);
    for (int v = 0; v < n; ++v) {
        auto pa = p.parents_of(v);
        for (size_t i = 0; i < pa.size(); ++i) {
            for (size_t j = i + 1; j < pa.size(); ++j) {
                if (p.adjacent(pa[i], pa[j])) continue;
                if (e.has_edge(pa[i], v)) e.orient_edge(pa[i], v);
                if (e.has_edge(pa[j], v)) e.orient_edge(pa[j], v);
            }
        }
    }
    return meek_closure(e);
}

bool same_mec(const Dag& g1, const Dag& g2) {
    if (g1.nodes() != g2.nodes()) throw GraphError("same_mec: node sets differ");
    return skeleton(g1.pdag()) == skeleton(g2.pdag()) && v_structures(g1) == v_structures(g2);
}

namespace {

bool directed_path_exists(const Pdag& g, int from, int to) {
    if (from == to) return true;
    std::vector<char> seen(static_cast<size_t>(g.num_nodes()), 0);
    std::deque<int> q = {from};
    seen[static_cast<size_t>(from)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int c : g.children_of(v)) {
            if (c == to) return true;
            if (!seen[static_cast<size_t>(c)]) {
                seen[static_cast<size_t>(c)] = 1;
                q.push_back(c);
            }
        }
    }
    return false;
}

// Orienting a->b may only complete v-structures at head b.
bool creates_new_v_structure(const Pdag& g, int a, int b) {
    for (int w : g.parents_of(b)) {
        if (w != a && !g.adjacent(w, a)) return true;
    }
    return false;
}

}  // namespace

std::vector<Dag> enumerate_mec(const Pdag& e, long long cap) {
    if (cap <= 0) throw GraphError("enumerate_mec: cap must be positive");
    if (!arcs_acyclic(e)) throw GraphError("enumerate_mec: input arcs contain a directed cycle");
    const auto implied = arc_v_structures(e);
    auto pairs = e.edge_indices();
    std::vector<Dag> members;
    Pdag g = e;

    std::function<void(size_t)> recurse = [&](size_t idx) {
        if (idx == pairs.size()) {
            if (static_cast<long long>(members.size()) >= cap) {
                throw CapExceededError(
                    "enumerate_mec: cap of " + std::to_string(cap) + " members exceeded (" +
                        std::to_string(members.size()) + " enumerated before bailing)",
                    static_cast<long long>(members.size()));
            }
            Dag member(g);
            if (v_structures(member) != implied)
                throw GraphError("enumerate_mec: pruning let a v-structure slip through");
            members.push_back(std::move(member));
            return;
        }
        auto [u, v] = pairs[idx];
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            if (directed_path_exists(g, b, a)) continue;  // a->b would close a cycle
            if (creates_new_v_structure(g, a, b)) continue;
            g.orient_edge(a, b);
            recurse(idx + 1);
            g.unorient_arc(a, b);
        }
    };
    recurse(0);

    std::sort(members.begin(), members.end(),
              [](const Dag& a, const Dag& b) { return a.arcs() < b.arcs(); });
    return members;
}

bool is_covered(const Dag& g, int tail, int head) {
    const Pdag& p = g.pdag();
    if (!p.has_arc(tail, head)) return false;
    auto pa_tail = p.parents_of(tail);
    auto pa_head = p.parents_of(head);
    auto it = std::find(pa_head.begin(), pa_head.end(), tail);
    pa_head.erase(it);
    return pa_tail == pa_head;
}

namespace {

void validate_covered_forest(const Dag& g, const std::vector<std::pair<int, int>>& arcs) {
    const Pdag& p = g.pdag();
    const int n = p.num_nodes();
    // forest on the underlying undirected edges
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    std::vector<int> head_count(n, 0);
    for (auto [x, y] : arcs) {
        if (++head_count[y] > 1) throw GraphError("covered edges: node is head of two covered arcs");
        int rx = find(x), ry = find(y);
        if (rx == ry) throw GraphError("covered edges do not induce a forest");
        uf[rx] = ry;
    }
    // every covered head is a direct child of its tail
    for (auto [x, y] : arcs) {
        for (int c : p.children_of(x)) {
            if (c == y) continue;
            if (directed_path_exists(p, c, y))
                throw GraphError("covered arc head reachable through an intermediate vertex");
        }
    }
}

}  // namespace

CoveredForest covered_edges(const Dag& g) {
    const Pdag& p = g.pdag();
    std::vector<std::pair<int, int>> idx_arcs;
    for (auto [u, v] : p.arc_indices())
        if (is_covered(g, u, v)) idx_arcs.emplace_back(u, v);
    validate_covered_forest(g, idx_arcs);
    CoveredForest f;
    for (auto [u, v] : idx_arcs) f.arcs.emplace_back(p.name(u), p.name(v));
    std::sort(f.arcs.begin(), f.arcs.end());
    return f;
}

Dag reverse_covered_edge(const Dag& g, const Arc& arc) {
    const Pdag& p = g.pdag();
    int x = p.index_of(arc.first);
    int y = p.index_of(arc.second);
    if (!p.has_arc(x, y)) throw GraphError("no arc " + arc.first + "->" + arc.second);
    if (!is_covered(g, x, y))
        throw GraphError("arc " + arc.first + "->" + arc.second +
                         " is not covered; reversing it exits the MEC");
    Pdag q = p;
    q.reverse_arc(x, y);
    return Dag(std::move(q));
}

std::vector<Arc> chickering_sequence(const Dag& gs, const Dag& gt) {
    if (!same_mec(gs, gt)) throw GraphError("chickering_sequence: inputs are not in the same MEC");
    Dag g = gs;
    std::vector<Arc> seq;
    const Pdag& tp = gt.pdag();
    while (!(g.pdag() == tp)) {
        const Pdag& p = g.pdag();
        Ordering pi = topological_order(g);
        int best_y = -1, best_y_rank = 0;
        for (int v = 0; v < p.num_nodes(); ++v) {
            bool differing_parent = false;
            for (int u : p.parents_of(v))
                if (!tp.has_arc(u, v)) { differing_parent = true; break; }
            if (!differing_parent) continue;
            int rank = pi.rank_of(p.name(v));
            if (best_y == -1 || rank < best_y_rank) {
                best_y = v;
                best_y_rank = rank;
            }
        }
        if (best_y == -1) throw GraphError("chickering_sequence: no differing arc found");  // cannot happen
        int best_x = -1, best_x_rank = -1;
        for (int u : p.parents_of(best_y)) {
            if (tp.has_arc(u, best_y)) continue;
            int rank = pi.rank_of(p.name(u));
            if (rank > best_x_rank) {
                best_x = u;
                best_x_rank = rank;
            }
        }
        Arc arc{p.name(best_x), p.name(best_y)};
        g = reverse_covered_edge(g, arc);  // validates coveredness
        seq.push_back(arc);
    }
    return seq;
}

Matching crg_matching(const Dag& g, const Ordering& pi, const std::set<Arc>& s) {
    const Pdag& p = g.pdag();
    if (!pi.valid_for(p)) throw GraphError("crg_matching: ordering is not valid for the DAG");
    const long long n = p.num_nodes();
    auto forest = covered_edges(g);
    std::vector<Arc> remaining = forest.arcs;
    Matching m;
    while (!remaining.empty()) {
        // root: minimum-rank tail among remaining covered arcs
        NodeId x;
        int x_rank = -1;
        for (const auto& a : remaining) {
            int r = pi.rank_of(a.first);
            if (x_rank == -1 || r < x_rank) {
                x_rank = r;
                x = a.first;
            }
        }
        // head: favor arcs outside of s via the n^2 penalty
        NodeId y;
        long long best_key = -1;
        for (const auto& a : remaining) {
            if (a.first != x) continue;
            long long key = pi.rank_of(a.second) + (s.count(a) ? n * n : 0);
            if (best_key == -1 || key < best_key) {
                best_key = key;
                y = a.second;
            }
        }
        m.arcs.emplace_back(x, y);
        std::erase_if(remaining, [&](const Arc& a) {
            return a.first == x || a.second == x || a.first == y || a.second == y;
        });
    }
    std::sort(m.arcs.begin(), m.arcs.end());
    return m;
}

}  // namespace causalsearch
