#include "causalsearch/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "causalsearch/advice.hpp"
#include "causalsearch/chordal.hpp"
#include "causalsearch/mec.hpp"
#include "causalsearch/oracle.hpp"
#include "causalsearch/rng.hpp"
#include "causalsearch/search.hpp"
#include "causalsearch/verification.hpp"

namespace causalsearch {

namespace {

std::vector<NodeId> numbered_nodes(int n) {
    size_t width = std::to_string(n).size();
    std::vector<NodeId> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        std::string digits = std::to_string(i);
        names.push_back("v" + std::string(width - digits.size(), '0') + digits);
    }
    return names;
}

// Uniform random labeled tree from a Pruefer sequence.
std::vector<std::pair<int, int>> random_tree_edges(int n, Rng& rng) {
    if (n == 2) return {{0, 1}};
    std::vector<int> pruefer(static_cast<size_t>(n - 2));
    for (auto& x : pruefer) x = rng.below_int(n);
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int x : pruefer) degree[static_cast<size_t>(x)]++;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int x : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--degree[static_cast<size_t>(x)] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return edges;
}

}  // namespace

UGraph gen_chordal(ChordalKind kind, int n, std::uint64_t seed) {
    if (n < 2) throw GraphError("gen_chordal: n must be >= 2");
    Rng rng(seed);
    Pdag g(numbered_nodes(n));

    switch (kind) {
        case ChordalKind::Tree: {
            for (auto [u, v] : random_tree_edges(n, rng)) g.add_edge(u, v);
            break;
        }
        case ChordalKind::Thickened: {
            std::set<std::pair<int, int>> edges(
                [&] { auto e = random_tree_edges(n, rng); return std::set<std::pair<int, int>>(e.begin(), e.end()); }());
            // Fill-in from a random elimination order: eliminating a vertex
            // connects its remaining neighbors into a clique.
            std::vector<int> order(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
            rng.shuffle(order);
            std::vector<std::set<int>> adj(static_cast<size_t>(n));
            for (auto [u, v] : edges) {
                adj[static_cast<size_t>(u)].insert(v);
                adj[static_cast<size_t>(v)].insert(u);
            }
            std::vector<char> gone(static_cast<size_t>(n), 0);
            for (int v : order) {
                gone[static_cast<size_t>(v)] = 1;
                std::vector<int> live;
                for (int u : adj[static_cast<size_t>(v)])
                    if (!gone[static_cast<size_t>(u)]) live.push_back(u);
                for (size_t i = 0; i < live.size(); ++i) {
                    for (size_t j = i + 1; j < live.size(); ++j) {
                        int a = live[i], b = live[j];
                        if (adj[static_cast<size_t>(a)].insert(b).second) {
                            adj[static_cast<size_t>(b)].insert(a);
                            edges.emplace(std::min(a, b), std::max(a, b));
                        }
                    }
                }
            }
            for (auto [u, v] : edges) g.add_edge(u, v);
            break;
        }
        case ChordalKind::Interval: {
            const int span = 4 * n;
            std::vector<std::pair<int, int>> intervals;
            intervals.reserve(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                int lo = rng.below_int(span);
                int len = 1 + rng.below_int(std::max(1, span / 8));
                intervals.emplace_back(lo, lo + len);
            }
            // Bridge gaps so the intersection graph is connected: sweep by
            // left endpoint and stretch the furthest-reaching interval seen.
            std::vector<int> by_left(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) by_left[static_cast<size_t>(i)] = i;
            std::sort(by_left.begin(), by_left.end(), [&](int a, int b) {
                return intervals[static_cast<size_t>(a)] < intervals[static_cast<size_t>(b)];
            });
            int reach_idx = by_left[0];
            for (size_t i = 1; i < by_left.size(); ++i) {
                int cur = by_left[i];
                if (intervals[static_cast<size_t>(cur)].first > intervals[static_cast<size_t>(reach_idx)].second)
                    intervals[static_cast<size_t>(reach_idx)].second = intervals[static_cast<size_t>(cur)].first;
                if (intervals[static_cast<size_t>(cur)].second > intervals[static_cast<size_t>(reach_idx)].second)
                    reach_idx = cur;
            }
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (intervals[static_cast<size_t>(u)].first <= intervals[static_cast<size_t>(v)].second &&
                        intervals[static_cast<size_t>(v)].first <= intervals[static_cast<size_t>(u)].second)
                        g.add_edge(u, v);
            break;
        }
    }

    UGraph out(std::move(g));
    if (!is_chordal(out)) throw GraphError("gen_chordal produced a non-chordal graph");
    return out;
}

std::vector<Dag> sample_mec_dags(const UGraph& skel, int m, std::uint64_t seed, SampleMode mode,
                                 long long cap) {
    if (m < 1) throw GraphError("sample_mec_dags: m must be positive");
    if (!is_chordal(skel)) throw GraphError("sample_mec_dags: skeleton must be chordal");

    std::vector<Dag> out;
    out.reserve(static_cast<size_t>(m));
    if (mode == SampleMode::Exhaustive) {
        std::vector<Dag> members;
        try {
            members = enumerate_mec(skel.pdag(), cap);
        } catch (const CapExceededError& e) {
            throw CapExceededError(std::string(e.what()) + "; consider walk mode", e.partial_count);
        }
        Rng rng(seed);
        for (int t = 0; t < m; ++t)
            out.push_back(members[static_cast<size_t>(rng.below(members.size()))]);
    } else {
        const Dag start = extend_mpdag(skel.pdag());
        const int steps = 10 * skel.num_nodes();
        for (int t = 1; t <= m; ++t) {
            Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
            Dag g = start;
            for (int s = 0; s < steps; ++s) {
                auto covered = covered_edges(g).arcs;
                if (covered.empty()) break;
                g = reverse_covered_edge(g, covered[static_cast<size_t>(rng.below(covered.size()))]);
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

ExperimentResult run_experiment(const UGraph& skel, int m, double delta, int k, std::uint64_t seed,
                                SampleMode mode, long long cap) {
    if (m < 1) throw GraphError("run_experiment: m must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw GraphError("run_experiment: delta must be in (0,1)");
    if (!is_chordal(skel)) throw GraphError("run_experiment: skeleton must be chordal");

    ExperimentResult result;
    result.n = skel.num_nodes();
    result.m = m;
    result.delta = delta;
    result.k = k;
    result.seed = seed;
    result.mode = mode;

    auto advice = sample_mec_dags(skel, m, seed, mode, cap);
    Rng rng(seed);
    result.truth_index = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    const Dag& truth = advice[static_cast<size_t>(result.truth_index)];
    result.nu1 = nu1(truth);

    {
        Oracle oracle(truth);
        result.blind_count = full_search(oracle, k).total;
    }

    std::map<int, std::vector<long long>> buckets;
    for (const auto& tilde : advice) {
        auto vtilde = verifying_set_atomic(tilde);
        int psi = psi_proxy(truth, vtilde).psi;
        Oracle oracle(truth);
        auto report = advice_search(oracle, tilde, k);
        if (!oracle.is_fully_oriented()) throw GraphError("experiment trial did not recover the truth");
        buckets[psi].push_back(report.total);
    }

    result.eps = std::max(std::sqrt(static_cast<double>(result.n) / m),
                          std::sqrt((2.0 / m) * std::log(2.0 / delta)));

    long long cumulative = 0;
    for (const auto& [psi, counts] : buckets) {
        ExperimentRow row;
        row.psi = psi;
        row.trials = static_cast<int>(counts.size());
        double mean = 0.0;
        for (long long c : counts) mean += static_cast<double>(c);
        mean /= static_cast<double>(counts.size());
        double var = 0.0;
        for (long long c : counts) var += (static_cast<double>(c) - mean) * (static_cast<double>(c) - mean);
        var /= static_cast<double>(counts.size());  // population std
        row.mean_advice = mean;
        row.std_advice = std::sqrt(var);
        row.nu1 = result.nu1;
        row.mean_blind = static_cast<double>(result.blind_count);
        cumulative += static_cast<long long>(counts.size());
        row.ecdf = static_cast<double>(cumulative) / static_cast<double>(m);
        row.eps = result.eps;
        result.rows.push_back(row);
    }
    return result;
}

std::string to_csv(const ExperimentResult& result) {
    std::ostringstream os;
    char buf[512];
    const char* sampler = result.mode == SampleMode::Exhaustive
                              ? "exhaustive uniform=true"
                              : "walk uniform=false (covered-edge random walk, approximately mixed)";
    std::snprintf(buf, sizeof(buf), "# n=%d m=%d delta=%.6f k=%d seed=%llu sampler=%s\n", result.n,
                  result.m, result.delta, result.k, static_cast<unsigned long long>(result.seed), sampler);
    os << buf;
    os << "psi,trials,mean_advice,std_advice,nu1,mean_blind,ecdf,eps\n";
    for (const auto& row : result.rows) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%.6f,%.6f,%d,%.6f,%.6f,%.6f\n", row.psi, row.trials,
                      row.mean_advice, row.std_advice, row.nu1, row.mean_blind, row.ecdf, row.eps);
        os << buf;
    }
    return os.str();
}

}  // namespace causalsearch
