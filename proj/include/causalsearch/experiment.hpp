#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "causalsearch/graph.hpp"

namespace causalsearch {

enum class ChordalKind { Tree, Thickened, Interval };
enum class SampleMode { Exhaustive, Walk };

/// Connected chordal graph on n nodes, deterministic in (kind, n, seed).
/// tree = uniform random labeled tree (Pruefer); thickened = tree plus the
/// fill-in of a random elimination order; interval = intersection graph of
/// n random intervals, bridged to be connected.
UGraph gen_chordal(ChordalKind kind, int n, std::uint64_t seed);

/// m DAGs from the MEC of the chordal skeleton. Exhaustive mode enumerates
/// the class (cap-guarded) and draws uniformly with replacement; walk mode
/// runs independent covered-edge-reversal walks of length 10n and is only
/// approximately uniform. Walk stream for sample t (1-based): seed ^ t.
std::vector<Dag> sample_mec_dags(const UGraph& skel, int m, std::uint64_t seed, SampleMode mode,
                                 long long cap);

struct ExperimentRow {
    int psi = 0;
    int trials = 0;
    double mean_advice = 0.0;
    double std_advice = 0.0;  // population standard deviation
    int nu1 = 0;
    double mean_blind = 0.0;
    double ecdf = 0.0;
    double eps = 0.0;
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;  // sorted by psi ascending
    int n = 0;
    int m = 0;
    double delta = 0.0;
    int k = 1;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::Exhaustive;
    int truth_index = 0;
    int nu1 = 0;
    long long blind_count = 0;
    double eps = 0.0;
};

/// The full pipeline: sample m advice DAGs, pick the truth among them, run
/// advice search per advice bucketed by psi, and the blind search baseline.
/// eps = max{sqrt(n/m), sqrt((2/m) ln(2/delta))}. Deterministic in seed.
ExperimentResult run_experiment(const UGraph& skel, int m, double delta, int k, std::uint64_t seed,
                                SampleMode mode, long long cap);

/// CSV with the exact header psi,trials,mean_advice,std_advice,nu1,mean_blind,ecdf,eps
/// (reals to 6 decimal places), preceded by one '#' metadata line.
std::string to_csv(const ExperimentResult& result);

int cli_main(const std::vector<std::string>& args);

}  // namespace causalsearch
