// mpolish: micro-clustering by graph polishing.
//
// Subcommands compose through plain text formats: edge lists, cluster
// files, transaction files, and JSON reports. Exit codes distinguish
// polishing outcomes so pipelines can branch on them:
//   0 success / converged, 1 usage or I/O error, 2 cycle detected,
//   3 iteration cap reached, 4 clique cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "micropolish/cliques.hpp"
#include "micropolish/evaluate.hpp"
#include "micropolish/graph.hpp"
#include "micropolish/instances.hpp"
#include "micropolish/polishing.hpp"
#include "micropolish/similarity.hpp"

namespace mp = micropolish;
using nlohmann::json;

namespace {

struct MeasureOpts {
    std::string kind = "jaccard";
    std::uint32_t k = 2;
    double theta = 0.15;

    mp::SimilarityMeasure build() const {
        if (kind == "kcommon") return mp::SimilarityMeasure::k_common(k);
        if (kind == "jaccard") return mp::SimilarityMeasure::jaccard(theta);
        if (kind == "pmi") return mp::SimilarityMeasure::pmi(theta);
        throw CLI::ValidationError("--measure", "must be kcommon, jaccard or pmi");
    }

    json to_json() const {
        json j{{"measure", kind}};
        if (kind == "kcommon") j["k"] = k;
        else j["theta"] = theta;
        return j;
    }

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--measure", kind, "Similarity measure: kcommon, jaccard or pmi")
            ->check(CLI::IsMember({"kcommon", "jaccard", "pmi"}));
        cmd->add_option("--k", k, "Common-neighbor threshold for kcommon");
        cmd->add_option("--theta", theta, "Similarity threshold for jaccard/pmi");
    }
};

unsigned resolve_threads(unsigned threads) {
    return threads ? threads : std::max(1u, std::thread::hardware_concurrency());
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

void emit_report(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_text(out_path, j.dump(2) + "\n");
}

int status_exit_code(mp::PolishStatus s) {
    switch (s) {
        case mp::PolishStatus::Converged: return 0;
        case mp::PolishStatus::CycleDetected: return 2;
        case mp::PolishStatus::CapReached: return 3;
    }
    return 1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"micro-clustering by iterated graph polishing"};
    app.require_subcommand(1);

    int exit_code = 0;

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate benchmark and adversarial graphs");
    gen->require_subcommand(1);
    std::string gen_out, gen_truth_out, gen_manifest;

    auto add_gen_outputs = [&](CLI::App* cmd, bool with_truth) {
        cmd->add_option("--out", gen_out, "Output edge-list path")->required();
        if (with_truth) cmd->add_option("--truth-out", gen_truth_out, "Ground-truth cluster file");
        cmd->add_option("--manifest", gen_manifest, "Instance manifest JSON path");
    };

    mp::PlantedParams pp{5000, 100, 30, 1, 0.5, 1};
    auto* gp = gen->add_subcommand("planted", "Planted cliques with rewiring noise");
    gp->set_help_flag("--help", "Print help");  // frees -h for the clique count
    gp->add_option("--n", pp.n, "Vertex count")->required();
    gp->add_option("--h", pp.h, "Number of planted cliques")->required();
    gp->add_option("--clique-size", pp.clique_size, "Planted clique size");
    gp->add_option("--b", pp.b, "Max cliques per vertex");
    gp->add_option("--p", pp.p, "Edge survival probability");
    gp->add_option("--seed", pp.seed, "Random seed");
    add_gen_outputs(gp, true);
    gp->callback([&] {
        auto inst = mp::gen_planted(pp);
        mp::save_edge_list_file(inst.graph, gen_out);
        if (!gen_truth_out.empty()) mp::save_clusters_file(inst.truth, gen_truth_out);
        if (!gen_manifest.empty()) write_text(gen_manifest, inst.manifest_json() + "\n");
    });

    std::uint32_t t3_k = 5;
    auto* g3 = gen->add_subcommand("theorem3", "Period-2 oscillator for k-common polishing");
    g3->add_option("--k", t3_k, "Polishing parameter k (>= 5)")->required();
    add_gen_outputs(g3, false);
    g3->callback([&] { mp::save_edge_list_file(mp::gen_theorem3_graph(t3_k), gen_out); });

    std::uint32_t t5_n = 8;
    auto* g5 = gen->add_subcommand("theorem5", "Polished gadget with 2^(n/2) maximal cliques");
    g5->add_option("--n", t5_n, "Base size n (even, >= 4)")->required();
    add_gen_outputs(g5, false);
    g5->callback([&] { mp::save_edge_list_file(mp::gen_theorem5_graph(t5_n), gen_out); });

    std::uint32_t t6_m1 = 1, t6_m2 = 2, t6_n = 2;
    auto* g6 = gen->add_subcommand("theorem6", "Jaccard-polishing oscillator G_{m1,m2,n}");
    g6->add_option("--m1", t6_m1)->required();
    g6->add_option("--m2", t6_m2)->required();
    g6->add_option("--n", t6_n)->required();
    add_gen_outputs(g6, false);
    g6->callback([&] { mp::save_edge_list_file(mp::gen_theorem6_graph(t6_m1, t6_m2, t6_n), gen_out); });

    mp::ZipfParams zp{10000, 100.0, 1.0, 2.0, 1};
    auto* gz = gen->add_subcommand("zipf", "Random graph with Zipf-bounded degrees");
    gz->add_option("--n", zp.n, "Vertex count")->required();
    gz->add_option("--alpha", zp.alpha, "Degree scale");
    gz->add_option("--delta", zp.delta, "Zipf exponent");
    gz->add_option("--beta", zp.beta, "Degree floor");
    gz->add_option("--seed", zp.seed, "Random seed");
    add_gen_outputs(gz, false);
    gz->callback([&] { mp::save_edge_list_file(mp::gen_zipf_graph(zp), gen_out); });

    // ---- polish -------------------------------------------------------
    auto* pol = app.add_subcommand("polish", "Iterate polishing to a fixpoint or cap");
    std::string pol_in, pol_out, pol_report;
    MeasureOpts pol_m;
    std::uint32_t pol_tau = 30;
    unsigned pol_threads = 0;
    pol->add_option("input", pol_in, "Input edge list")->required();
    pol_m.add_flags(pol);
    pol->add_option("--tau", pol_tau, "Iteration cap");
    pol->add_option("--threads", pol_threads, "Worker threads (0 = all cores)");
    pol->add_option("--out", pol_out, "Polished edge-list path");
    pol->add_option("--report", pol_report, "Report JSON path (default stdout)");
    pol->callback([&] {
        auto g = mp::load_edge_list_file(pol_in);
        auto [polished, report] = mp::polish(g, pol_m.build(), pol_tau, resolve_threads(pol_threads));
        if (!pol_out.empty()) mp::save_edge_list_file(polished, pol_out);
        json j = json::parse(report.to_json());
        j["config"] = pol_m.to_json();
        j["config"]["tau"] = pol_tau;
        emit_report(j, pol_report);
        exit_code = status_exit_code(report.status);
    });

    // ---- cliques ------------------------------------------------------
    auto* clq = app.add_subcommand("cliques", "Enumerate maximal cliques");
    std::string clq_in, clq_out;
    std::uint32_t clq_min_size = 2;
    std::uint64_t clq_cap = 0;
    clq->add_option("input", clq_in, "Input edge list")->required();
    clq->add_option("--min-size", clq_min_size, "Smallest clique size to report");
    clq->add_option("--max-cliques", clq_cap, "Abort beyond this many cliques (0 = unlimited)");
    clq->add_option("--out", clq_out, "Cluster file path")->required();
    clq->callback([&] {
        auto g = mp::load_edge_list_file(clq_in);
        auto c = mp::enumerate_maximal_cliques(g, clq_min_size, clq_cap);
        mp::save_clusters_file(c, clq_out);
    });

    // ---- eval ---------------------------------------------------------
    auto* ev = app.add_subcommand("eval", "Score a clustering against ground truth");
    std::string ev_truth, ev_found, ev_out;
    bool ev_drop_singletons = false;
    ev->add_option("truth", ev_truth, "Ground-truth cluster file")->required();
    ev->add_option("found", ev_found, "Found cluster file")->required();
    ev->add_flag("--drop-singletons", ev_drop_singletons, "Exclude size-1 found clusters from recall");
    ev->add_option("--out", ev_out, "Report JSON path (default stdout)");
    ev->callback([&] {
        auto truth = mp::load_clusters_file(ev_truth);
        auto found = mp::load_clusters_file(ev_found);
        auto r = mp::accuracy(truth, found, ev_drop_singletons);
        json j = json::parse(r.to_json());
        j["config"] = {{"drop_singletons", ev_drop_singletons}};
        emit_report(j, ev_out);
    });

    // ---- stats --------------------------------------------------------
    auto* st = app.add_subcommand("stats", "Descriptive statistics of a clustering");
    std::string st_in, st_out;
    mp::VertexId st_n = 0;
    st->add_option("clusters", st_in, "Cluster file")->required();
    st->add_option("--n", st_n, "Vertex universe size")->required();
    st->add_option("--out", st_out, "Report JSON path (default stdout)");
    st->callback([&] {
        auto c = mp::load_clusters_file(st_in);
        emit_report(json::parse(mp::cluster_stats(c, st_n).to_json()), st_out);
    });

    // ---- pipeline -----------------------------------------------------
    auto* pipe = app.add_subcommand("pipeline", "build -> polish -> enumerate in one run");
    std::string pipe_in, pipe_out, pipe_report, pipe_format = "edges";
    MeasureOpts pipe_m;
    std::uint32_t pipe_tau = 30, pipe_min_size = 2;
    std::uint64_t pipe_cap = 0;
    unsigned pipe_threads = 0;
    double record_theta = 0.2, max_df_ratio = 0.01;
    std::uint32_t min_df = 0;
    bool max_df_strict = false;
    pipe->add_option("input", pipe_in, "Edge list or transaction file")->required();
    pipe->add_option("--input-format", pipe_format, "edges or transactions")
        ->check(CLI::IsMember({"edges", "transactions"}));
    pipe_m.add_flags(pipe);
    pipe->add_option("--tau", pipe_tau, "Iteration cap");
    pipe->add_option("--min-size", pipe_min_size, "Smallest cluster size to report");
    pipe->add_option("--record-theta", record_theta, "Jaccard threshold for record similarity");
    pipe->add_option("--min-df", min_df, "Drop items in fewer than this many records");
    pipe->add_option("--max-df-ratio", max_df_ratio, "Drop items in at least this fraction of records");
    pipe->add_flag("--max-df-strict", max_df_strict, "Use a strict upper document-frequency bound");
    pipe->add_option("--max-cliques", pipe_cap, "Abort beyond this many cliques (0 = unlimited)");
    pipe->add_option("--threads", pipe_threads, "Worker threads (0 = all cores)");
    pipe->add_option("--out", pipe_out, "Cluster file path")->required();
    pipe->add_option("--report", pipe_report, "Report JSON path (default stdout)");
    pipe->callback([&] {
        unsigned threads = resolve_threads(pipe_threads);
        auto t0 = std::chrono::steady_clock::now();

        mp::Graph g;
        if (pipe_format == "transactions") {
            std::ifstream in(pipe_in, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open " + pipe_in);
            std::ostringstream ss;
            ss << in.rdbuf();
            auto db = mp::load_transactions(ss.str());
            db = mp::filter_by_document_frequency(db, min_df, max_df_ratio, max_df_strict);
            g = mp::build_similarity_graph_from_db(db, mp::SimilarityMeasure::jaccard(record_theta),
                                                   threads);
        } else {
            g = mp::load_edge_list_file(pipe_in);
        }
        double t_build = seconds_since(t0);

        auto [polished, preport] = mp::polish(g, pipe_m.build(), pipe_tau, threads);
        double t_polish = seconds_since(t0) - t_build;

        auto clusters = mp::enumerate_maximal_cliques(polished, pipe_min_size, pipe_cap);
        mp::save_clusters_file(clusters, pipe_out);
        double t_cliques = seconds_since(t0) - t_build - t_polish;

        json config = pipe_m.to_json();
        config["tau"] = pipe_tau;
        config["min_size"] = pipe_min_size;
        config["threads"] = threads;
        config["input_format"] = pipe_format;
        config["max_cliques"] = pipe_cap;
        if (pipe_format == "transactions") {
            config["record_theta"] = record_theta;
            config["min_df"] = min_df;
            config["max_df_ratio"] = max_df_ratio;
            config["max_df_strict"] = max_df_strict;
        }
        json j{{"config", config},
               {"polish", json::parse(preport.to_json())},
               {"stats", json::parse(mp::cluster_stats(clusters, polished.num_vertices()).to_json())},
               {"timings", {{"build_s", t_build}, {"polish_s", t_polish}, {"cliques_s", t_cliques}}}};
        emit_report(j, pipe_report);
        exit_code = status_exit_code(preport.status);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int c = app.exit(e);
        return c == 0 ? 0 : 1;
    } catch (const mp::CliqueCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
