#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "causalsearch/advice.hpp"
#include "causalsearch/experiment.hpp"
#include "causalsearch/json_io.hpp"
#include "causalsearch/mec.hpp"
#include "causalsearch/oracle.hpp"
#include "causalsearch/search.hpp"
#include "causalsearch/verification.hpp"

namespace causalsearch {

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot write '" + path + "'");
    out << content;
    if (!content.empty() && content.back() != '\n') out << "\n";
}

nlohmann::json report_to_json(const SearchReport& report) {
    nlohmann::json j;
    j["total"] = report.total;
    j["interventions"] = report.interventions.sets;
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto& r : report.rounds) {
        rounds.push_back({{"i", r.index},
                          {"radius", r.radius},
                          {"relevant", r.relevant},
                          {"c_size", r.c_size},
                          {"c_prime_size", r.c_prime_size},
                          {"safeguard", r.safeguard}});
    }
    j["rounds"] = rounds;
    j["final"] = nlohmann::json::parse(save_graph(report.final_graph));
    return j;
}

std::string format_sets(const std::vector<std::vector<NodeId>>& sets) {
    std::ostringstream os;
    for (size_t i = 0; i < sets.size(); ++i) {
        os << (i ? " " : "") << "{";
        for (size_t j = 0; j < sets[i].size(); ++j) os << (j ? "," : "") << sets[i][j];
        os << "}";
    }
    return os.str();
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"active causal structure learning with advice"};
    app.require_subcommand(1);

    std::string input, output, truth_path, advice_path, mpdag_path, skeleton_path, kind_str = "tree",
                               mode_str = "exhaustive";
    std::uint64_t seed = 0;
    int k = 1, n = 8, m = 100;
    long long cap = 1000000;
    double delta = 0.01;
    bool json_out = false, psi_full_flag = false;

    auto* gen = app.add_subcommand("gen", "generate a connected chordal skeleton");
    gen->add_option("--kind", kind_str, "tree|thickened|interval")->check(CLI::IsMember({"tree", "thickened", "interval"}));
    gen->add_option("--n", n, "node count")->required();
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("-o,--output", output, "output path (default stdout)");

    auto* essential = app.add_subcommand("essential", "essential graph of a DAG");
    essential->add_option("-i,--input", input, "DAG json")->required();
    essential->add_option("-o,--output", output, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "verification number and verifying set");
    verify->add_option("-i,--input", input, "DAG json")->required();
    verify->add_option("--k", k, "intervention size bound (default 1)");
    verify->add_flag("--json", json_out, "machine-readable stdout");

    auto* search = app.add_subcommand("search", "adaptive search against a hidden DAG");
    search->add_option("--truth", truth_path, "ground-truth DAG json")->required();
    search->add_option("--advice", advice_path, "advice DAG json");
    search->add_option("--mpdag", mpdag_path, "partial advice MPDAG json");
    search->add_option("--k", k, "intervention size bound (default 1)");
    search->add_flag("--json", json_out, "machine-readable stdout");

    auto* psi = app.add_subcommand("psi", "advice quality measures");
    psi->add_option("--truth", truth_path, "ground-truth DAG json")->required();
    psi->add_option("--advice", advice_path, "advice DAG json")->required();
    psi->add_flag("--full", psi_full_flag, "maximize over all minimum verifying sets");
    psi->add_option("--cap", cap, "cover enumeration cap for --full");
    psi->add_flag("--json", json_out, "machine-readable stdout");

    auto* experiment = app.add_subcommand("experiment", "psi-bucketed intervention counts");
    experiment->add_option("--skeleton", skeleton_path, "chordal skeleton json")->required();
    experiment->add_option("--m", m, "number of advice DAGs")->required();
    experiment->add_option("--delta", delta, "confidence parameter in (0,1)");
    experiment->add_option("--cap", cap, "MEC enumeration cap");
    experiment->add_option("--mode", mode_str, "exhaustive|walk")->check(CLI::IsMember({"exhaustive", "walk"}));
    experiment->add_option("--seed", seed, "rng seed");
    experiment->add_option("--k", k, "intervention size bound (default 1)");
    experiment->add_option("-o,--output", output, "CSV path (default stdout)");

    auto* mec_enum = app.add_subcommand("mec-enum", "enumerate the Markov equivalence class");
    mec_enum->add_option("-i,--input", input, "graph json (essential graph or PDAG)")->required();
    mec_enum->add_option("--cap", cap, "member cap");
    mec_enum->add_flag("--json", json_out, "machine-readable stdout");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string prog = "causalsearch";
    argv.push_back(prog.data());
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            ChordalKind kind = kind_str == "tree"        ? ChordalKind::Tree
                               : kind_str == "thickened" ? ChordalKind::Thickened
                                                         : ChordalKind::Interval;
            write_output(output, save_graph(gen_chordal(kind, n, seed).pdag()));
        } else if (essential->parsed()) {
            Dag dag(load_graph_file(input));
            write_output(output, save_graph(essential_graph(dag)));
        } else if (verify->parsed()) {
            Dag dag(load_graph_file(input));
            auto cover = verifying_set_atomic(dag);
            auto bounded = verifying_set_bounded(dag, k);
            if (json_out) {
                nlohmann::json j;
                j["nu1"] = cover.size();
                j["verifying_set"] = cover;
                j["k"] = k;
                j["interventions"] = bounded.sets;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "nu1 = " << cover.size() << "\n";
                std::cout << "verifying set = " << format_sets({cover}) << "\n";
                if (k > 1) std::cout << "bounded (k=" << k << ") = " << format_sets(bounded.sets) << "\n";
            }
        } else if (search->parsed()) {
            Dag truth(load_graph_file(truth_path));
            Oracle oracle(truth);
            SearchReport report;
            if (!advice_path.empty() && !mpdag_path.empty())
                throw GraphError("give either --advice or --mpdag, not both");
            if (!advice_path.empty()) {
                report = advice_search(oracle, Dag(load_graph_file(advice_path)), k);
            } else if (!mpdag_path.empty()) {
                report = advice_search_mpdag(oracle, load_graph_file(mpdag_path), k);
            } else {
                report = full_search(oracle, k);
            }
            if (json_out) {
                std::cout << report_to_json(report).dump() << "\n";
            } else {
                std::cout << "interventions = " << report.total << "\n";
                std::cout << "sets = " << format_sets(report.interventions.sets) << "\n";
                for (const auto& r : report.rounds)
                    std::cout << "round " << r.index << ": r=" << r.radius << " n_i=" << r.relevant
                              << " |C|=" << r.c_size << " |C'|=" << r.c_prime_size
                              << (r.safeguard ? " (safeguard)" : "") << "\n";
            }
        } else if (psi->parsed()) {
            Dag truth(load_graph_file(truth_path));
            Dag advice(load_graph_file(advice_path));
            auto vtilde = verifying_set_atomic(advice);
            auto quality = psi_proxy(truth, vtilde);
            int full_value = psi_full_flag ? psi_full(truth, advice, cap) : -1;
            if (json_out) {
                nlohmann::json j;
                j["h"] = quality.h;
                j["psi"] = quality.psi;
                j["verifying_set"] = vtilde;
                j["rho_by_radius"] = quality.rho_by_radius;
                if (psi_full_flag) j["psi_full"] = full_value;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "h = " << quality.h << "\n";
                std::cout << "psi = " << quality.psi << "\n";
                if (psi_full_flag) std::cout << "psi_full = " << full_value << "\n";
            }
        } else if (experiment->parsed()) {
            UGraph skel(load_graph_file(skeleton_path));
            SampleMode mode = mode_str == "walk" ? SampleMode::Walk : SampleMode::Exhaustive;
            auto result = run_experiment(skel, m, delta, k, seed, mode, cap);
            write_output(output, to_csv(result));
        } else if (mec_enum->parsed()) {
            auto members = enumerate_mec(load_graph_file(input), cap);
            if (json_out) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& d : members) j.push_back(nlohmann::json::parse(save_graph(d.pdag())));
                std::cout << j.dump() << "\n";
            } else {
                std::cout << members.size() << " members\n";
                for (const auto& d : members) std::cout << save_graph(d.pdag()) << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace causalsearch
