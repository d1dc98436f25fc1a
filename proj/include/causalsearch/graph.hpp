#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace causalsearch {

/// Error type for all graph/contract violations (bad input, broken invariant).
struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration exceeds its cap; carries the partial count.
struct CapExceededError : GraphError {
    CapExceededError(const std::string& msg, long long partial) : GraphError(msg), partial_count(partial) {}
    long long partial_count;
};

/// Node identifier. Lexicographic order on the token is the single global
/// tie-breaker: every "pick any" below resolves to smallest NodeId first.
using NodeId = std::string;

using Arc = std::pair<NodeId, NodeId>;       // (tail, head)
using EdgePair = std::pair<NodeId, NodeId>;  // unordered, stored low-before-high
using VStructure = std::tuple<NodeId, NodeId, NodeId>;  // u -> v <- w, u < w

/// Partially directed graph: node set, directed arcs, undirected edges.
/// Nodes are kept sorted; internally every node is an index into that order,
/// so index comparisons coincide with NodeId comparisons.
class Pdag {
public:
    Pdag() = default;
    explicit Pdag(std::vector<NodeId> nodes);

    int num_nodes() const { return n_; }
    const std::vector<NodeId>& nodes() const { return names_; }
    bool contains(const NodeId& v) const;
    int index_of(const NodeId& v) const;  // throws GraphError on unknown node
    const NodeId& name(int i) const { return names_[static_cast<size_t>(i)]; }

    bool has_arc(int u, int v) const { return cell(u, v) == kArcOut; }
    bool has_edge(int u, int v) const { return cell(u, v) == kUndirected; }
    bool adjacent(int u, int v) const { return cell(u, v) != kNone; }

    bool has_arc(const NodeId& u, const NodeId& v) const { return has_arc(index_of(u), index_of(v)); }
    bool has_edge(const NodeId& u, const NodeId& v) const { return has_edge(index_of(u), index_of(v)); }
    bool adjacent(const NodeId& u, const NodeId& v) const { return adjacent(index_of(u), index_of(v)); }

    void add_arc(int u, int v);
    void add_edge(int u, int v);
    void add_arc(const NodeId& u, const NodeId& v) { add_arc(index_of(u), index_of(v)); }
    void add_edge(const NodeId& u, const NodeId& v) { add_edge(index_of(u), index_of(v)); }

    /// Turns the undirected edge {u,v} into the arc u -> v.
    void orient_edge(int u, int v);
    /// Turns the arc u -> v back into an undirected edge.
    void unorient_arc(int u, int v);
    /// Replaces the arc u -> v with v -> u.
    void reverse_arc(int u, int v);

    int num_arcs() const { return num_arcs_; }
    int num_edges() const { return num_edges_; }

    std::vector<std::pair<int, int>> arc_indices() const;   // sorted (tail, head)
    std::vector<std::pair<int, int>> edge_indices() const;  // sorted, low < high
    std::vector<Arc> arcs() const;
    std::vector<EdgePair> edges() const;

    std::vector<int> parents_of(int v) const;
    std::vector<int> children_of(int v) const;
    std::vector<int> undirected_neighbors_of(int v) const;
    std::vector<int> adjacent_to(int v) const;

    bool operator==(const Pdag& other) const = default;

private:
    enum : std::uint8_t { kNone = 0, kArcOut = 1, kArcIn = 2, kUndirected = 3 };
    std::uint8_t cell(int u, int v) const { return mat_[static_cast<size_t>(u) * n_ + v]; }
    void set_cell(int u, int v, std::uint8_t x) { mat_[static_cast<size_t>(u) * n_ + v] = x; }
    void check_pair(int u, int v) const;

    int n_ = 0;
    int num_arcs_ = 0;
    int num_edges_ = 0;
    std::vector<NodeId> names_;       // sorted, unique
    std::vector<std::uint8_t> mat_;   // n_ * n_ cells
};

/// Fully oriented acyclic graph. Construction verifies both properties.
class Dag {
public:
    Dag() = default;
    explicit Dag(Pdag g);
    const Pdag& pdag() const { return g_; }
    operator const Pdag&() const { return g_; }

    int num_nodes() const { return g_.num_nodes(); }
    const std::vector<NodeId>& nodes() const { return g_.nodes(); }
    std::vector<Arc> arcs() const { return g_.arcs(); }

    bool operator==(const Dag& other) const = default;

private:
    Pdag g_;
};

/// Fully unoriented graph.
class UGraph {
public:
    UGraph() = default;
    explicit UGraph(Pdag g);
    const Pdag& pdag() const { return g_; }
    operator const Pdag&() const { return g_; }

    int num_nodes() const { return g_.num_nodes(); }
    const std::vector<NodeId>& nodes() const { return g_.nodes(); }
    std::vector<EdgePair> edges() const { return g_.edges(); }

    bool operator==(const UGraph& other) const = default;

private:
    Pdag g_;
};

/// Bijection NodeId -> 1..n; valid for a graph when every arc goes rank-up.
class Ordering {
public:
    Ordering() = default;
    explicit Ordering(std::vector<NodeId> sequence);

    const std::vector<NodeId>& sequence() const { return seq_; }
    int size() const { return static_cast<int>(seq_.size()); }
    int rank_of(const NodeId& v) const;  // 1-based
    bool valid_for(const Pdag& g) const;

private:
    std::vector<NodeId> seq_;
    std::vector<std::pair<NodeId, int>> rank_;  // sorted by NodeId
};

struct Ancestry {
    std::vector<NodeId> parents;
    std::vector<NodeId> direct_children;  // children not reachable through an intermediate vertex
    std::vector<NodeId> ancestors;
    std::vector<NodeId> descendants;
};

UGraph skeleton(const Pdag& g);

/// All u -> v <- w with u, w non-adjacent; canonicalized with u < w; sorted.
std::vector<VStructure> v_structures(const Dag& g);

/// V-structures among the arcs of a partially directed graph (non-adjacency
/// judged against the full graph). Used for consistency checks of PDAGs.
std::vector<VStructure> arc_v_structures(const Pdag& g);

/// Kahn's algorithm with an ordered frontier: among available sources the
/// smallest NodeId always comes first. Throws naming one cycle if cyclic.
Ordering topological_order(const Dag& g);
Ordering topological_order_of_pdag_arcs(const Pdag& g);  // ignores undirected edges

bool arcs_acyclic(const Pdag& g);

/// Connected components of the undirected part; fully oriented nodes come out
/// as singletons. Components sorted by first node, nodes sorted inside.
std::vector<std::vector<NodeId>> chain_components(const Pdag& g);
std::vector<std::vector<int>> chain_component_indices(const Pdag& g);

/// BFS ball of radius r around seed. N^0 = seed.
std::vector<NodeId> hop_neighborhood(const UGraph& g, const std::vector<NodeId>& seed, int r);

/// Multi-source BFS distances on the undirected view; -1 = unreachable.
std::vector<int> bfs_distances(const Pdag& g, const std::vector<int>& sources);

Ancestry ancestry(const Dag& g, const NodeId& v);

/// Node-induced subgraph (keeps arcs and edges with both endpoints inside).
Pdag induced_subgraph(const Pdag& g, const std::vector<int>& node_indices);

namespace detail {
std::vector<NodeId> indices_to_names(const Pdag& g, const std::vector<int>& idx);
std::vector<int> names_to_indices(const Pdag& g, const std::vector<NodeId>& names);
}  // namespace detail

}  // namespace causalsearch
