#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netrecon/csv.hpp"
#include "netrecon/experiment.hpp"

using namespace netrecon;

namespace {

std::vector<MetricSpec> parse_metric_list(const std::string& arg) {
    if (arg.empty() || arg == "all") return all_metrics();
    std::vector<MetricSpec> metrics;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) metrics.push_back(MetricSpec::from_name(tok));
    }
    if (metrics.empty()) throw std::invalid_argument("empty metric list");
    return metrics;
}

std::vector<double> parse_grid(const std::string& arg) {
    std::vector<double> grid;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        grid.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad grid value: " + tok);
    }
    if (grid.empty()) throw std::invalid_argument("empty grid");
    return grid;
}

SpreadModel parse_spread_model(const std::string& s) {
    if (s == "sir") return SpreadModel::SIR;
    if (s == "si") return SpreadModel::SI;
    if (s == "ltm") return SpreadModel::LTM;
    throw std::invalid_argument("unknown spread model: " + s + " (expected sir, si or ltm)");
}

int run_cli(int argc, char** argv) {
    CLI::App app{"netrecon: hidden-network reconstruction benchmark from spreading time-series"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    // ---- generate ----------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("generate", "Generate a synthetic network (BA or SW)");
    std::string gen_model, gen_out, gen_name;
    GeneratorParams gen;
    gen_cmd->add_option("--model", gen_model, "Generator model: ba or sw")->required();
    gen_cmd->add_option("--n", gen.n, "Node count")->required();
    gen_cmd->add_option("--k", gen.k_avg, "Target mean degree")->required();
    gen_cmd->add_option("--m0", gen.m0, "BA seed graph size (default k+1)");
    gen_cmd->add_option("--p", gen.rewire_p, "SW rewiring probability")->default_val(0.1);
    gen_cmd->add_option("--seed", gen.seed, "RNG seed")->default_val(1);
    gen_cmd->add_option("--out", gen_out, "Output edge-list file")->required();
    gen_cmd->add_option("--name", gen_name, "Network name for the stats line");

    // ---- stats -------------------------------------------------------------
    auto* stats_cmd = app.add_subcommand("stats", "Print statistics of an edge-list file");
    std::string stats_graph, stats_name, stats_id_mode = "remap";
    stats_cmd->add_option("--graph", stats_graph, "Edge-list file")->required();
    stats_cmd->add_option("--name", stats_name, "Name for the CSV line (default: file stem)");
    stats_cmd->add_option("--id-mode", stats_id_mode, "Node id handling: remap or dense");

    // ---- simulate ----------------------------------------------------------
    auto* sim_cmd = app.add_subcommand("simulate", "Run spreading cascades over a network");
    std::string sim_graph, sim_model = "sir", sim_out;
    SpreadParams sim_params;
    double sim_beta_mult = 0;
    uint32_t sim_m = 50;
    uint64_t sim_seed = 1;
    uint32_t sim_max_steps = 0;
    sim_cmd->add_option("--graph", sim_graph, "Edge-list file")->required();
    sim_cmd->add_option("--model", sim_model, "Spreading model: sir, si or ltm");
    auto* sim_beta_opt = sim_cmd->add_option("--beta", sim_params.beta, "Transmission probability");
    auto* sim_mult_opt =
        sim_cmd->add_option("--beta-mult", sim_beta_mult, "Beta as a multiple of the epidemic threshold");
    auto* sim_mu_opt = sim_cmd->add_option("--mu", sim_params.mu, "Recovery probability (SIR)");
    sim_cmd->add_option("--f", sim_params.f, "Initiator probability")->default_val(0.5);
    sim_cmd->add_option("--theta", sim_params.theta, "Activation threshold (LTM)")->default_val(0.1);
    sim_cmd->add_option("--m", sim_m, "Number of cascades")->default_val(50);
    sim_cmd->add_option("--seed", sim_seed, "RNG seed")->default_val(1);
    sim_cmd->add_option("--max-steps", sim_max_steps, "Hard step cap (0 = default)");
    sim_cmd->add_option("--out", sim_out, "Output cascade CSV")->required();

    // ---- score -------------------------------------------------------------
    auto* score_cmd = app.add_subcommand("score", "Compute similarity scores from a cascade CSV");
    std::string score_cascades, score_graph, score_metrics = "all", score_out;
    uint32_t score_n = 0;
    std::size_t score_pa_top_k = 100000;
    uint32_t score_dense_threshold = 4096;
    score_cmd->add_option("--cascades", score_cascades, "Cascade CSV (node,item,time)")->required();
    score_cmd->add_option("--graph", score_graph, "Edge-list file supplying the node count");
    score_cmd->add_option("--n", score_n, "Node count (alternative to --graph)");
    score_cmd->add_option("--metrics", score_metrics, "Comma-separated metric names, or 'all'");
    score_cmd->add_option("--pa-top-k", score_pa_top_k, "Pairs kept when dumping static PA scores");
    score_cmd->add_option("--dense-threshold", score_dense_threshold,
                          "Dense score storage up to this node count");
    score_cmd->add_option("--out", score_out, "Output directory (one CSV per metric)")->required();

    // ---- evaluate ----------------------------------------------------------
    auto* eval_cmd = app.add_subcommand("evaluate", "Score a reconstruction against the true network");
    std::string eval_scores, eval_graph;
    eval_cmd->add_option("--scores", eval_scores, "Scores CSV (i,j,score)")->required();
    eval_cmd->add_option("--graph", eval_graph, "True network edge-list file")->required();

    // ---- benchmark ---------------------------------------------------------
    auto* bench_cmd = app.add_subcommand(
        "benchmark", "Full pipeline: simulate, score and evaluate over one or more networks");
    std::string bench_config, bench_metrics, bench_out, bench_model;
    std::vector<std::string> bench_graphs;
    std::string bench_gen_model;
    GeneratorParams bench_gen;
    double bench_beta = 0, bench_beta_mult = 0, bench_mu = 1, bench_f = 0.5, bench_theta = 0.1;
    uint32_t bench_m = 0, bench_repeats = 0, bench_threads = 0, bench_dense = 0;
    uint64_t bench_seed = 0;
    bench_cmd->add_option("--config", bench_config, "Experiment config JSON (or a run manifest)");
    bench_cmd->add_option("--graph", bench_graphs, "Edge-list file(s), repeatable");
    bench_cmd->add_option("--gen-model", bench_gen_model, "Generator model (ba or sw) instead of --graph");
    bench_cmd->add_option("--n", bench_gen.n, "Generator node count");
    bench_cmd->add_option("--k", bench_gen.k_avg, "Generator mean degree");
    bench_cmd->add_option("--m0", bench_gen.m0, "BA seed graph size");
    bench_cmd->add_option("--p", bench_gen.rewire_p, "SW rewiring probability");
    bench_cmd->add_option("--gen-seed", bench_gen.seed, "Generator seed");
    auto* b_model = bench_cmd->add_option("--model", bench_model, "Spreading model: sir, si or ltm");
    auto* b_beta = bench_cmd->add_option("--beta", bench_beta, "Transmission probability");
    auto* b_mult = bench_cmd->add_option("--beta-mult", bench_beta_mult,
                                         "Beta as a multiple of the epidemic threshold");
    auto* b_mu = bench_cmd->add_option("--mu", bench_mu, "Recovery probability");
    auto* b_f = bench_cmd->add_option("--f", bench_f, "Initiator probability");
    auto* b_theta = bench_cmd->add_option("--theta", bench_theta, "Activation threshold (LTM)");
    auto* b_m = bench_cmd->add_option("--m", bench_m, "Cascades per repeat");
    auto* b_rep = bench_cmd->add_option("--repeats", bench_repeats, "Independent repeats");
    auto* b_metrics = bench_cmd->add_option("--metrics", bench_metrics, "Metric names or 'all'");
    auto* b_seed = bench_cmd->add_option("--seed", bench_seed, "Master seed");
    auto* b_threads = bench_cmd->add_option("--threads", bench_threads, "Worker threads (0 = auto)");
    auto* b_dense = bench_cmd->add_option("--dense-threshold", bench_dense,
                                          "Dense score storage up to this node count");
    bench_cmd->add_option("--out", bench_out, "Output directory")->required();

    // ---- sweep-beta --------------------------------------------------------
    auto* sweep_cmd = app.add_subcommand("sweep-beta", "Benchmark over a grid of beta values");
    std::string sweep_config, sweep_grid, sweep_mult_grid, sweep_out;
    sweep_cmd->add_option("--config", sweep_config, "Experiment config JSON")->required();
    sweep_cmd->add_option("--beta-grid", sweep_grid, "Comma-separated absolute beta values");
    sweep_cmd->add_option("--beta-mult-grid", sweep_mult_grid,
                          "Comma-separated multiples of the epidemic threshold");
    sweep_cmd->add_option("--out", sweep_out, "Output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // 0 for --help/--version, 1 for usage errors
    }

    if (gen_cmd->parsed()) {
        gen.model = gen_model == "sw" ? GraphModel::SW : GraphModel::BA;
        if (gen_model != "ba" && gen_model != "sw")
            throw std::invalid_argument("unknown generator model: " + gen_model);
        if (gen.model == GraphModel::BA && gen.m0 == 0) gen.m0 = gen.k_avg + 1;
        Rng rng(gen.seed);
        Graph g = generate(gen, rng);
        write_edge_list_file(g, gen_out);
        const std::string name =
            gen_name.empty() ? (gen_model + "_n" + std::to_string(gen.n)) : gen_name;
        std::cout << stats_csv_header() << '\n' << stats_csv_line(name, g) << '\n';
        return 0;
    }

    if (stats_cmd->parsed()) {
        IdMode mode = stats_id_mode == "dense" ? IdMode::Dense : IdMode::Remap;
        if (stats_id_mode != "remap" && stats_id_mode != "dense")
            throw std::invalid_argument("unknown id mode: " + stats_id_mode);
        Graph g = load_edge_list_file(stats_graph, mode);
        std::string name = stats_name;
        if (name.empty()) {
            auto slash = stats_graph.find_last_of("/\\");
            name = slash == std::string::npos ? stats_graph : stats_graph.substr(slash + 1);
            auto dot = name.find_last_of('.');
            if (dot != std::string::npos) name = name.substr(0, dot);
        }
        std::cout << stats_csv_header() << '\n' << stats_csv_line(name, g) << '\n';
        return 0;
    }

    if (sim_cmd->parsed()) {
        Graph g = load_edge_list_file(sim_graph);
        sim_params.model = parse_spread_model(sim_model);
        if (sim_params.model == SpreadModel::SI && sim_mu_opt->count() == 0) sim_params.mu = 0.0;
        const bool needs_beta = sim_params.model != SpreadModel::LTM;
        if (needs_beta && sim_beta_opt->count() == 0 && sim_mult_opt->count() == 0)
            throw std::invalid_argument("sir/si need --beta or --beta-mult");
        if (!needs_beta && (sim_beta_opt->count() > 0 || sim_mult_opt->count() > 0))
            throw std::invalid_argument("ltm takes --theta, not --beta/--beta-mult");
        if (sim_mult_opt->count() > 0) {
            if (sim_beta_opt->count() > 0)
                throw std::invalid_argument("--beta and --beta-mult are mutually exclusive");
            sim_params.beta = std::min(sim_beta_mult * epidemic_threshold(g), 1.0);
        }
        if (sim_max_steps > 0) sim_params.max_steps = sim_max_steps;
        CascadeSet cs = run_cascades(g, sim_params, sim_m, sim_seed);
        cs.save_csv_file(sim_out);
        std::cerr << "wrote " << cs.num_records() << " infection events for " << sim_m
                  << " cascades to " << sim_out << '\n';
        return 0;
    }

    if (score_cmd->parsed()) {
        std::optional<NodeId> n_override;
        if (!score_graph.empty())
            n_override = load_edge_list_file(score_graph).num_nodes();
        else if (score_n > 0)
            n_override = score_n;
        CascadeSet cs = CascadeSet::load_csv_file(score_cascades, n_override);
        SimilarityOptions opt{score_dense_threshold};
        const auto metrics = parse_metric_list(score_metrics);
        CoAdoptionTable table(cs, kernels_required(metrics), opt);
        std::filesystem::create_directories(score_out);
        for (const auto& spec : metrics) {
            SimilarityScores scores = table.metric(spec);
            const std::string path = score_out + "/scores_" + spec.name() + ".csv";
            write_scores_csv(scores, path, score_pa_top_k);
        }
        std::cerr << "wrote " << metrics.size() << " score files to " << score_out << '\n';
        return 0;
    }

    if (eval_cmd->parsed()) {
        Graph g = load_edge_list_file(eval_graph);
        SimilarityScores scores = load_scores_csv(eval_scores, g.num_nodes());
        const double p = precision_at_e(scores, g);
        const double a = auc_exact(scores, g);
        std::cout << "precision,auc\n" << format_double(p) << ',' << format_double(a) << '\n';
        return 0;
    }

    if (bench_cmd->parsed()) {
        ExperimentSpec spec;
        if (!bench_config.empty()) spec = load_spec_file(bench_config);
        for (const auto& path : bench_graphs) {
            NetworkSource src;
            src.path = path;
            spec.networks.push_back(src);
        }
        if (!bench_gen_model.empty()) {
            if (bench_gen_model != "ba" && bench_gen_model != "sw")
                throw std::invalid_argument("unknown generator model: " + bench_gen_model);
            bench_gen.model = bench_gen_model == "ba" ? GraphModel::BA : GraphModel::SW;
            if (bench_gen.model == GraphModel::BA && bench_gen.m0 == 0)
                bench_gen.m0 = bench_gen.k_avg + 1;
            NetworkSource src;
            src.generator = bench_gen;
            spec.networks.push_back(src);
        }
        if (b_model->count() > 0) spec.spread.model = parse_spread_model(bench_model);
        if (b_beta->count() > 0) {
            spec.spread.beta = bench_beta;
            spec.beta_mult.reset();
        }
        if (b_mult->count() > 0) spec.beta_mult = bench_beta_mult;
        if (b_mu->count() > 0) spec.spread.mu = bench_mu;
        if (b_f->count() > 0) spec.spread.f = bench_f;
        if (b_theta->count() > 0) spec.spread.theta = bench_theta;
        if (b_m->count() > 0) spec.cascades = bench_m;
        if (b_rep->count() > 0) spec.repeats = bench_repeats;
        if (b_metrics->count() > 0) spec.metrics = parse_metric_list(bench_metrics);
        if (b_seed->count() > 0) spec.master_seed = bench_seed;
        if (b_threads->count() > 0) spec.threads = bench_threads;
        if (b_dense->count() > 0) spec.similarity.dense_threshold = bench_dense;
        spec.output_dir = bench_out;

        BenchmarkResult result = run_benchmark(spec);
        auto files = write_benchmark_outputs(result, bench_out);
        for (const auto& ds : result.datasets) {
            std::cerr << "dataset " << ds.name << ": n=" << ds.n << " E=" << ds.num_edges
                      << " beta=" << format_double(ds.beta_resolved)
                      << (ds.beta_clamped ? " (clamped to 1)" : "") << '\n';
        }
        std::cerr << "wrote " << files.size() << " files to " << bench_out << '\n';
        return 0;
    }

    if (sweep_cmd->parsed()) {
        ExperimentSpec spec = load_spec_file(sweep_config);
        std::vector<SweepPoint> grid;
        if (!sweep_grid.empty() && !sweep_mult_grid.empty())
            throw std::invalid_argument("--beta-grid and --beta-mult-grid are mutually exclusive");
        if (!sweep_grid.empty())
            for (double v : parse_grid(sweep_grid)) grid.push_back({v, false});
        else if (!sweep_mult_grid.empty())
            for (double v : parse_grid(sweep_mult_grid)) grid.push_back({v, true});
        else
            throw std::invalid_argument("sweep-beta needs --beta-grid or --beta-mult-grid");
        auto rows = sweep_beta(spec, grid);
        write_sweep_csv(rows, sweep_out);
        std::cerr << "wrote " << rows.size() << " rows to " << sweep_out << '\n';
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1; // usage error
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2; // data error
    }
}
