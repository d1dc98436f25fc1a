#include "causalsearch/graph.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace causalsearch {

Pdag::Pdag(std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    for (size_t i = 1; i < nodes.size(); ++i) {
        if (nodes[i] == nodes[i - 1]) throw GraphError("duplicate node '" + nodes[i] + "'");
    }
    names_ = std::move(nodes);
    n_ = static_cast<int>(names_.size());
    mat_.assign(static_cast<size_t>(n_) * n_, kNone);
}

bool Pdag::contains(const NodeId& v) const {
    return std::binary_search(names_.begin(), names_.end(), v);
}

int Pdag::index_of(const NodeId& v) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), v);
    if (it == names_.end() || *it != v) throw GraphError("unknown node '" + v + "'");
    return static_cast<int>(it - names_.begin());
}

void Pdag::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("node index out of range");
    if (u == v) throw GraphError("self-loop at '" + name(u) + "'");
}

void Pdag::add_arc(int u, int v) {
    check_pair(u, v);
    if (cell(u, v) != kNone) throw GraphError("duplicate pair " + name(u) + "," + name(v));
    set_cell(u, v, kArcOut);
    set_cell(v, u, kArcIn);
    ++num_arcs_;
}

void Pdag::add_edge(int u, int v) {
    check_pair(u, v);
    if (cell(u, v) != kNone) throw GraphError("duplicate pair " + name(u) + "," + name(v));
    set_cell(u, v, kUndirected);
    set_cell(v, u, kUndirected);
    ++num_edges_;
}

void Pdag::orient_edge(int u, int v) {
    check_pair(u, v);
    if (cell(u, v) != kUndirected) throw GraphError("no undirected edge " + name(u) + "~" + name(v));
    set_cell(u, v, kArcOut);
    set_cell(v, u, kArcIn);
    --num_edges_;
    ++num_arcs_;
}

void Pdag::unorient_arc(int u, int v) {
    check_pair(u, v);
    if (cell(u, v) != kArcOut) throw GraphError("no arc " + name(u) + "->" + name(v));
    set_cell(u, v, kUndirected);
    set_cell(v, u, kUndirected);
    ++num_edges_;
    --num_arcs_;
}

void Pdag::reverse_arc(int u, int v) {
    check_pair(u, v);
    if (cell(u, v) != kArcOut) throw GraphError("no arc " + name(u) + "->" + name(v));
    set_cell(u, v, kArcIn);
    set_cell(v, u, kArcOut);
}

std::vector<std::pair<int, int>> Pdag::arc_indices() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(num_arcs_));
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (cell(u, v) == kArcOut) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> Pdag::edge_indices() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(num_edges_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (cell(u, v) == kUndirected) out.emplace_back(u, v);
    return out;
}

std::vector<Arc> Pdag::arcs() const {
    std::vector<Arc> out;
    for (auto [u, v] : arc_indices()) out.emplace_back(name(u), name(v));
    return out;
}

std::vector<EdgePair> Pdag::edges() const {
    std::vector<EdgePair> out;
    for (auto [u, v] : edge_indices()) out.emplace_back(name(u), name(v));
    return out;
}

std::vector<int> Pdag::parents_of(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (cell(u, v) == kArcOut) out.push_back(u);
    return out;
}

std::vector<int> Pdag::children_of(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (cell(v, u) == kArcOut) out.push_back(u);
    return out;
}

std::vector<int> Pdag::undirected_neighbors_of(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (cell(v, u) == kUndirected) out.push_back(u);
    return out;
}

std::vector<int> Pdag::adjacent_to(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && cell(v, u) != kNone) out.push_back(u);
    return out;
}

namespace detail {

std::vector<NodeId> indices_to_names(const Pdag& g, const std::vector<int>& idx) {
    std::vector<NodeId> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(g.name(i));
    return out;
}

std::vector<int> names_to_indices(const Pdag& g, const std::vector<NodeId>& names) {
    std::vector<int> out;
    out.reserve(names.size());
    for (const auto& v : names) out.push_back(g.index_of(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

bool arcs_acyclic(const Pdag& g) {
    const int n = g.num_nodes();
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : g.arc_indices()) indeg[v]++;
    std::deque<int> q;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push_back(v);
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        ++seen;
        for (int c : g.children_of(v))
            if (--indeg[c] == 0) q.push_back(c);
    }
    return seen == n;
}

Dag::Dag(Pdag g) : g_(std::move(g)) {
    if (g_.num_edges() != 0) throw GraphError("DAG must not contain undirected edges");
    if (!arcs_acyclic(g_)) {
        // reuse the ordering routine for a named cycle in the error message
        topological_order_of_pdag_arcs(g_);
        throw GraphError("cycle detected");  // unreachable
    }
}

UGraph::UGraph(Pdag g) : g_(std::move(g)) {
    if (g_.num_arcs() != 0) throw GraphError("undirected graph must not contain arcs");
}

Ordering::Ordering(std::vector<NodeId> sequence) : seq_(std::move(sequence)) {
    rank_.reserve(seq_.size());
    for (size_t i = 0; i < seq_.size(); ++i) rank_.emplace_back(seq_[i], static_cast<int>(i) + 1);
    std::sort(rank_.begin(), rank_.end());
    for (size_t i = 1; i < rank_.size(); ++i)
        if (rank_[i].first == rank_[i - 1].first)
            throw GraphError("ordering repeats node '" + rank_[i].first + "'");
}

int Ordering::rank_of(const NodeId& v) const {
    auto it = std::lower_bound(rank_.begin(), rank_.end(), std::make_pair(v, 0),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it == rank_.end() || it->first != v) throw GraphError("node '" + v + "' not in ordering");
    return it->second;
}

bool Ordering::valid_for(const Pdag& g) const {
    if (size() != g.num_nodes()) return false;
    for (const auto& v : seq_)
        if (!g.contains(v)) return false;
    for (const auto& [u, v] : g.arcs())
        if (rank_of(u) >= rank_of(v)) return false;
    return true;
}

UGraph skeleton(const Pdag& g) {
    Pdag s(g.nodes());
    const int n = g.num_nodes();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) s.add_edge(u, v);
    return UGraph(std::move(s));
}

std::vector<VStructure> v_structures(const Dag& g) {
    const Pdag& p = g.pdag();
    std::vector<VStructure> out;
    const int n = p.num_nodes();
    for (int v = 0; v < n; ++v) {
        auto pa = p.parents_of(v);
        for (size_t i = 0; i < pa.size(); ++i)
            for (size_t j = i + 1; j < pa.size(); ++j)
                if (!p.adjacent(pa[i], pa[j]))
                    out.emplace_back(p.name(pa[i]), p.name(v), p.name(pa[j]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VStructure> arc_v_structures(const Pdag& g) {
    std::vector<VStructure> out;
    const int n = g.num_nodes();
    for (int v = 0; v < n; ++v) {
        auto pa = g.parents_of(v);
        for (size_t i = 0; i < pa.size(); ++i)
            for (size_t j = i + 1; j < pa.size(); ++j)
                if (!g.adjacent(pa[i], pa[j]))
                    out.emplace_back(g.name(pa[i]), g.name(v), g.name(pa[j]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string format_cycle(const Pdag& g) {
    // Find one directed cycle among the arcs for the error message.
    const int n = g.num_nodes();
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<int> parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (state[s] != 0) continue;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            if (state[v] == 0) {
                state[v] = 1;
                for (int c : g.children_of(v)) {
                    if (state[c] == 1) {
                        std::vector<NodeId> cyc = {g.name(c)};
                        for (int x = v; x != c; x = parent[x]) cyc.push_back(g.name(x));
                        cyc.push_back(g.name(c));
                        std::reverse(cyc.begin() + 1, cyc.end() - 1);
                        std::ostringstream os;
                        os << "cycle detected: ";
                        for (size_t i = 0; i < cyc.size(); ++i) os << (i ? " -> " : "") << cyc[i];
                        return os.str();
                    }
                    if (state[c] == 0) {
                        parent[c] = v;
                        stack.push_back(c);
                    }
                }
            } else if (state[v] == 1) {
                state[v] = 2;
                stack.pop_back();
            } else {
                stack.pop_back();
            }
        }
    }
    return "cycle detected";
}

}  // namespace

Ordering topological_order_of_pdag_arcs(const Pdag& g) {
    const int n = g.num_nodes();
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : g.arc_indices()) indeg[v]++;
    std::set<int> frontier;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) frontier.insert(v);
    std::vector<NodeId> seq;
    seq.reserve(static_cast<size_t>(n));
    while (!frontier.empty()) {
        int v = *frontier.begin();
        frontier.erase(frontier.begin());
        seq.push_back(g.name(v));
        for (int c : g.children_of(v))
            if (--indeg[c] == 0) frontier.insert(c);
    }
    if (static_cast<int>(seq.size()) != n) throw GraphError(format_cycle(g));
    return Ordering(std::move(seq));
}

Ordering topological_order(const Dag& g) { return topological_order_of_pdag_arcs(g.pdag()); }

std::vector<std::vector<int>> chain_component_indices(const Pdag& g) {
    const int n = g.num_nodes();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::deque<int> q = {s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.undirected_neighbors_of(v)) {
                if (comp[u] == -1) {
                    comp[u] = next;
                    q.push_back(u);
                }
            }
        }
        ++next;
    }
    std::vector<std::vector<int>> out(static_cast<size_t>(next));
    for (int v = 0; v < n; ++v) out[static_cast<size_t>(comp[v])].push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<NodeId>> chain_components(const Pdag& g) {
    std::vector<std::vector<NodeId>> out;
    for (const auto& comp : chain_component_indices(g)) out.push_back(detail::indices_to_names(g, comp));
    return out;
}

std::vector<int> bfs_distances(const Pdag& g, const std::vector<int>& sources) {
    const int n = g.num_nodes();
    std::vector<int> dist(n, -1);
    std::deque<int> q;
    for (int s : sources) {
        if (dist[s] == -1) {
            dist[s] = 0;
            q.push_back(s);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : g.adjacent_to(v)) {
            if (dist[u] == -1) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
        }
    }
    return dist;
}

std::vector<NodeId> hop_neighborhood(const UGraph& g, const std::vector<NodeId>& seed, int r) {
    if (r < 0) throw GraphError("hop radius must be non-negative");
    auto src = detail::names_to_indices(g.pdag(), seed);
    auto dist = bfs_distances(g.pdag(), src);
    std::vector<int> out;
    for (int v = 0; v < g.num_nodes(); ++v)
        if (dist[v] >= 0 && dist[v] <= r) out.push_back(v);
    return detail::indices_to_names(g.pdag(), out);
}

namespace {

std::vector<char> reachable_from(const Pdag& g, int s) {
    std::vector<char> seen(static_cast<size_t>(g.num_nodes()), 0);
    std::deque<int> q = {s};
    seen[static_cast<size_t>(s)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int c : g.children_of(v)) {
            if (!seen[static_cast<size_t>(c)]) {
                seen[static_cast<size_t>(c)] = 1;
                q.push_back(c);
            }
        }
    }
    seen[static_cast<size_t>(s)] = 0;
    return seen;
}

}  // namespace

Ancestry ancestry(const Dag& g, const NodeId& v) {
    const Pdag& p = g.pdag();
    const int x = p.index_of(v);
    Ancestry a;
    a.parents = detail::indices_to_names(p, p.parents_of(x));

    auto desc = reachable_from(p, x);
    std::vector<int> desc_idx;
    for (int i = 0; i < p.num_nodes(); ++i)
        if (desc[static_cast<size_t>(i)]) desc_idx.push_back(i);
    a.descendants = detail::indices_to_names(p, desc_idx);

    std::vector<int> anc_idx;
    for (int i = 0; i < p.num_nodes(); ++i) {
        if (i == x) continue;
        auto r = reachable_from(p, i);
        if (r[static_cast<size_t>(x)]) anc_idx.push_back(i);
    }
    a.ancestors = detail::indices_to_names(p, anc_idx);

    // w is a direct child iff it is not reachable from x through another child.
    auto children = p.children_of(x);
    std::vector<int> direct;
    for (int w : children) {
        bool via_intermediate = false;
        for (int c : children) {
            if (c == w) continue;
            auto r = reachable_from(p, c);
            if (r[static_cast<size_t>(w)]) {
                via_intermediate = true;
                break;
            }
        }
        if (!via_intermediate) direct.push_back(w);
    }
    a.direct_children = detail::indices_to_names(p, direct);
    return a;
}

Pdag induced_subgraph(const Pdag& g, const std::vector<int>& node_indices) {
    std::vector<int> idx = node_indices;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    Pdag out(detail::indices_to_names(g, idx));
    for (size_t i = 0; i < idx.size(); ++i) {
        for (size_t j = i + 1; j < idx.size(); ++j) {
            int u = idx[i], v = idx[j];
            if (g.has_edge(u, v)) out.add_edge(static_cast<int>(i), static_cast<int>(j));
            else if (g.has_arc(u, v)) out.add_arc(static_cast<int>(i), static_cast<int>(j));
            else if (g.has_arc(v, u)) out.add_arc(static_cast<int>(j), static_cast<int>(i));
        }
    }
    return out;
}

}  // namespace causalsearch
