#include "causalsearch/verification.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace causalsearch {

namespace {

constexpr long long kInf = 1LL << 50;

// Undirected forest over the nodes touched by covered arcs.
struct Forest {
    std::vector<NodeId> nodes;                 // sorted
    std::vector<std::vector<int>> adj;         // indices into nodes
    int index(const NodeId& v) const {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
        return static_cast<int>(it - nodes.begin());
    }
};

Forest build_forest(const CoveredForest& f) {
    Forest out;
    for (const auto& [x, y] : f.arcs) {
        out.nodes.push_back(x);
        out.nodes.push_back(y);
    }
    std::sort(out.nodes.begin(), out.nodes.end());
    out.nodes.erase(std::unique(out.nodes.begin(), out.nodes.end()), out.nodes.end());
    out.adj.assign(out.nodes.size(), {});
    for (const auto& [x, y] : f.arcs) {
        int a = out.index(x), b = out.index(y);
        out.adj[static_cast<size_t>(a)].push_back(b);
        out.adj[static_cast<size_t>(b)].push_back(a);
    }
    return out;
}

// Min cover size with forced in/out constraints; kInf when infeasible.
// state: 0 free, 1 forced in, 2 forced out.
long long constrained_cover_size(const Forest& f, const std::vector<char>& state) {
    const int n = static_cast<int>(f.nodes.size());
    std::vector<char> visited(static_cast<size_t>(n), 0);
    long long total = 0;

    // Iterative post-order DP per tree: cost_in / cost_out per vertex.
    std::vector<long long> cost_in(static_cast<size_t>(n)), cost_out(static_cast<size_t>(n));
    for (int root = 0; root < n; ++root) {
        if (visited[static_cast<size_t>(root)]) continue;
        std::vector<std::pair<int, int>> stack = {{root, -1}};
        std::vector<std::pair<int, int>> post;
        visited[static_cast<size_t>(root)] = 1;
        while (!stack.empty()) {
            auto [v, parent] = stack.back();
            stack.pop_back();
            post.emplace_back(v, parent);
            for (int u : f.adj[static_cast<size_t>(v)]) {
                if (u == parent) continue;
                visited[static_cast<size_t>(u)] = 1;
                stack.emplace_back(u, v);
            }
        }
        for (auto it = post.rbegin(); it != post.rend(); ++it) {
            auto [v, parent] = *it;
            long long in_cost = 1, out_cost = 0;
            for (int u : f.adj[static_cast<size_t>(v)]) {
                if (u == parent) continue;
                in_cost += std::min(cost_in[static_cast<size_t>(u)], cost_out[static_cast<size_t>(u)]);
                out_cost += cost_in[static_cast<size_t>(u)];
            }
            if (state[static_cast<size_t>(v)] == 1) out_cost = kInf;
            if (state[static_cast<size_t>(v)] == 2) in_cost = kInf;
            cost_in[static_cast<size_t>(v)] = std::min(in_cost, kInf);
            cost_out[static_cast<size_t>(v)] = std::min(out_cost, kInf);
        }
        total += std::min(cost_in[static_cast<size_t>(root)], cost_out[static_cast<size_t>(root)]);
        if (total >= kInf) return kInf;
    }
    return total;
}

}  // namespace

std::vector<NodeId> min_vertex_cover_forest(const CoveredForest& f) {
    Forest forest = build_forest(f);
    const int n = static_cast<int>(forest.nodes.size());
    std::vector<char> state(static_cast<size_t>(n), 0);
    const long long m = constrained_cover_size(forest, state);

    // Greedy in NodeId order: keep a vertex iff some minimum cover extends
    // the current choices with it; this yields the lex-smallest minimum cover.
    std::vector<NodeId> cover;
    for (int v = 0; v < n; ++v) {
        state[static_cast<size_t>(v)] = 1;
        if (constrained_cover_size(forest, state) == m) {
            cover.push_back(forest.nodes[static_cast<size_t>(v)]);
        } else {
            state[static_cast<size_t>(v)] = 2;
        }
    }
    if (static_cast<long long>(cover.size()) != m) throw GraphError("forest cover DP is inconsistent");
    return cover;
}

std::vector<std::vector<NodeId>> all_min_vertex_covers(const CoveredForest& f, long long cap) {
    if (cap <= 0) throw GraphError("all_min_vertex_covers: cap must be positive");
    Forest forest = build_forest(f);
    const int n = static_cast<int>(forest.nodes.size());
    std::vector<char> state(static_cast<size_t>(n), 0);
    const long long m = constrained_cover_size(forest, state);

    std::vector<std::vector<NodeId>> covers;
    std::function<void(int)> recurse = [&](int v) {
        if (v == n) {
            if (static_cast<long long>(covers.size()) >= cap)
                throw CapExceededError(
                    "minimum-cover enumeration exceeded cap " + std::to_string(cap) +
                        "; use the deterministic cover (psi_proxy) instead",
                    static_cast<long long>(covers.size()));
            std::vector<NodeId> cover;
            for (int i = 0; i < n; ++i)
                if (state[static_cast<size_t>(i)] == 1) cover.push_back(forest.nodes[static_cast<size_t>(i)]);
            covers.push_back(std::move(cover));
            return;
        }
        for (char choice : {char(1), char(2)}) {
            state[static_cast<size_t>(v)] = choice;
            if (constrained_cover_size(forest, state) == m) recurse(v + 1);
        }
        state[static_cast<size_t>(v)] = 0;
    };
    recurse(0);
    return covers;
}

std::vector<NodeId> verifying_set_atomic(const Dag& g) { return min_vertex_cover_forest(covered_edges(g)); }

int nu1(const Dag& g) { return static_cast<int>(verifying_set_atomic(g).size()); }

void LabelTable::check() const {
    if (static_cast<int>(labels.size()) != n) throw GraphError("label table: wrong row count");
    std::set<std::vector<int>> distinct(labels.begin(), labels.end());
    if (static_cast<int>(distinct.size()) != n) throw GraphError("label table: labels not distinct");
    const int bound = (n + a - 1) / a;
    for (int d = 0; d < ell; ++d) {
        std::map<int, int> uses;
        for (const auto& row : labels) {
            if (static_cast<int>(row.size()) != ell) throw GraphError("label table: wrong label length");
            if (row[static_cast<size_t>(d)] < 0 || row[static_cast<size_t>(d)] > a)
                throw GraphError("label table: letter out of alphabet");
            uses[row[static_cast<size_t>(d)]]++;
        }
        for (auto [letter, count] : uses)
            if (letter != 0 && count > bound)
                throw GraphError("label table: integer letter used more than ceil(n/a) times");
    }
    for (const auto& row : labels)
        if (row[0] == 0) throw GraphError("label table: zero letter in first digit");
}

LabelTable separating_labels(int n, int k, int a) {
    if (n < 1) throw GraphError("separating_labels: n must be positive");
    if (k < 1 || 2 * k > n) throw GraphError("separating_labels: need 1 <= k <= n/2");
    if (a < 2) throw GraphError("separating_labels: need a >= 2");

    LabelTable t;
    t.n = n;
    t.k = k;
    t.a = a;
    t.ell = 0;
    long long power = 1;
    while (power < n) {
        power *= a;
        ++t.ell;
    }
    t.labels.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(t.ell), 0));

    // Recursive balanced splitting: digit d is a round-robin letter over the
    // elements of every non-singleton group; same-letter elements form the
    // next level's groups. Group sizes shrink by ceil(size/a) per level, so
    // all groups are singletons after ell digits and labels are distinct.
    std::vector<std::vector<int>> groups = {std::vector<int>(static_cast<size_t>(n))};
    for (int i = 0; i < n; ++i) groups[0][static_cast<size_t>(i)] = i;
    for (int d = 0; d < t.ell; ++d) {
        std::vector<std::vector<int>> next_groups;
        int counter = 0;
        for (const auto& grp : groups) {
            if (grp.size() <= 1) continue;  // digit stays 0
            std::vector<std::vector<int>> parts(static_cast<size_t>(a));
            for (int elem : grp) {
                int letter = counter % a + 1;
                ++counter;
                t.labels[static_cast<size_t>(elem)][static_cast<size_t>(d)] = letter;
                parts[static_cast<size_t>(letter - 1)].push_back(elem);
            }
            for (auto& part : parts)
                if (!part.empty()) next_groups.push_back(std::move(part));
        }
        groups = std::move(next_groups);
    }
    for (const auto& grp : groups)
        if (grp.size() > 1) throw GraphError("separating_labels: splitting did not terminate");
    t.check();
    return t;
}

InterventionSet bounded_partition(std::vector<NodeId> nodes, int k) {
    if (k < 1) throw GraphError("bounded_partition: k must be >= 1");
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    const int c = static_cast<int>(nodes.size());
    if (c == 0) return InterventionSet(k, {});
    if (k == 1 || c == 1) {
        std::vector<std::vector<NodeId>> sets;
        for (const auto& v : nodes) sets.push_back({v});
        return InterventionSet(k, std::move(sets));
    }
    const int k_prime = std::max(1, std::min(k, c / 2));
    const int a = (c + k_prime - 1) / k_prime;
    LabelTable t = separating_labels(c, k_prime, a);
    std::vector<std::vector<NodeId>> sets;
    for (int digit = 0; digit < t.ell; ++digit) {
        for (int letter = 1; letter <= a; ++letter) {
            std::vector<NodeId> s;
            for (int i = 0; i < c; ++i)
                if (t.labels[static_cast<size_t>(i)][static_cast<size_t>(digit)] == letter)
                    s.push_back(nodes[static_cast<size_t>(i)]);
            if (!s.empty()) sets.push_back(std::move(s));
        }
    }
    return InterventionSet(k, std::move(sets));
}

InterventionSet verifying_set_bounded(const Dag& g, int k) {
    if (k < 1) throw GraphError("verifying_set_bounded: k must be >= 1");
    return bounded_partition(verifying_set_atomic(g), k);
}

}  // namespace causalsearch
