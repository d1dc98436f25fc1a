#include "causalsearch/meek.hpp"

namespace causalsearch {

namespace {

// Each matcher asks: may the undirected edge a~b be oriented a->b?

bool r1_applies(const Pdag& g, int a, int b) {
    for (int c : g.parents_of(a))
        if (!g.adjacent(c, b)) return true;
    return false;
}

bool r2_applies(const Pdag& g, int a, int b) {
    for (int c : g.children_of(a))
        if (g.has_arc(c, b)) return true;
    return false;
}

bool r3_applies(const Pdag& g, int a, int b) {
    auto nbrs = g.undirected_neighbors_of(a);
    for (size_t i = 0; i < nbrs.size(); ++i) {
        int c = nbrs[i];
        if (c == b || !g.has_arc(c, b)) continue;
        for (size_t j = 0; j < nbrs.size(); ++j) {
            int d = nbrs[j];
            if (j == i || d == b || !g.has_arc(d, b)) continue;
            if (!g.adjacent(c, d)) return true;
        }
    }
    return false;
}

bool r4_applies(const Pdag& g, int a, int b) {
    for (int d : g.undirected_neighbors_of(a)) {
        if (d == b || g.adjacent(d, b)) continue;
        for (int c : g.children_of(d)) {
            if (c == a || c == b) continue;
            if (g.has_arc(c, b) && g.adjacent(a, c)) return true;
        }
    }
    return false;
}

int first_rule(const Pdag& g, int a, int b) {
    if (r1_applies(g, a, b)) return 1;
    if (r2_applies(g, a, b)) return 2;
    if (r3_applies(g, a, b)) return 3;
    if (r4_applies(g, a, b)) return 4;
    return 0;
}

std::vector<RuleStep> run_closure(Pdag& g) {
    std::vector<RuleStep> trace;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [u, v] : g.edge_indices()) {
            if (!g.has_edge(u, v)) continue;  // oriented earlier in this pass
            int fwd = first_rule(g, u, v);
            int bwd = first_rule(g, v, u);
            if (fwd && bwd)
                throw GraphError("inconsistent input: rules orient " + g.name(u) + "~" + g.name(v) +
                                 " both ways (no consistent DAG extension)");
            if (fwd) {
                g.orient_edge(u, v);
                trace.push_back({fwd, {g.name(u), g.name(v)}});
                changed = true;
            } else if (bwd) {
                g.orient_edge(v, u);
                trace.push_back({bwd, {g.name(v), g.name(u)}});
                changed = true;
            }
        }
    }
    return trace;
}

}  // namespace

Pdag meek_closure(const Pdag& g) {
    Pdag out = g;
    run_closure(out);
    return out;
}

std::vector<RuleStep> rule_trace(const Pdag& g) {
    Pdag scratch = g;
    return run_closure(scratch);
}

}  // namespace causalsearch
