#include "netrecon/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "netrecon/csv.hpp"

namespace netrecon {

namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::string default_network_name(const NetworkSource& src, std::size_t index) {
    if (!src.name.empty()) return src.name;
    if (src.generator) {
        const auto& g = *src.generator;
        return (g.model == GraphModel::BA ? "ba" : "sw") + std::string("_n") +
               std::to_string(g.n) + "_k" + std::to_string(g.k_avg);
    }
    if (!src.path.empty()) return fs::path(src.path).stem().string();
    return "network" + std::to_string(index);
}

} // namespace

void ExperimentSpec::validate() const {
    if (networks.empty()) throw std::invalid_argument("experiment: no networks given");
    if (cascades < 1) throw std::invalid_argument("experiment: cascades must be >= 1");
    if (repeats < 1) throw std::invalid_argument("experiment: repeats must be >= 1");
    spread.validate();
    if (beta_mult) {
        if (*beta_mult <= 0) throw std::invalid_argument("experiment: beta_mult must be > 0");
        if (spread.model == SpreadModel::LTM)
            throw std::invalid_argument("experiment: beta_mult applies to SIR/SI only");
    }
    for (const auto& src : networks) {
        if (src.generator) {
            if (src.generator->n < 2) throw std::invalid_argument("experiment: generator n must be >= 2");
        } else {
            if (src.path.empty())
                throw std::invalid_argument("experiment: network needs a generator or a path");
            if (!fs::exists(src.path))
                throw std::invalid_argument("experiment: network file not found: " + src.path);
        }
    }
}

namespace {

SpreadModel model_from_string(const std::string& s) {
    if (s == "sir" || s == "SIR") return SpreadModel::SIR;
    if (s == "si" || s == "SI") return SpreadModel::SI;
    if (s == "ltm" || s == "LTM") return SpreadModel::LTM;
    throw std::invalid_argument("unknown spread model: " + s);
}

std::string model_to_string(SpreadModel m) {
    switch (m) {
    case SpreadModel::SIR: return "sir";
    case SpreadModel::SI: return "si";
    case SpreadModel::LTM: return "ltm";
    }
    return "?";
}

NetworkSource network_from_json(const nlohmann::json& j) {
    NetworkSource src;
    src.name = j.value("name", "");
    if (j.contains("model")) {
        GeneratorParams gen;
        const std::string model = j.at("model").get<std::string>();
        if (model == "ba" || model == "BA")
            gen.model = GraphModel::BA;
        else if (model == "sw" || model == "SW")
            gen.model = GraphModel::SW;
        else
            throw std::invalid_argument("unknown generator model: " + model);
        gen.n = j.at("n").get<NodeId>();
        gen.k_avg = j.at("k").get<uint32_t>();
        gen.m0 = j.value("m0", gen.model == GraphModel::BA ? gen.k_avg + 1 : 0);
        gen.rewire_p = j.value("p", 0.0);
        gen.seed = j.value("seed", 0ULL);
        src.generator = gen;
    } else {
        src.path = j.at("path").get<std::string>();
    }
    return src;
}

nlohmann::json network_to_json(const NetworkSource& src) {
    nlohmann::json j;
    if (!src.name.empty()) j["name"] = src.name;
    if (src.generator) {
        const auto& g = *src.generator;
        j["model"] = g.model == GraphModel::BA ? "ba" : "sw";
        j["n"] = g.n;
        j["k"] = g.k_avg;
        if (g.model == GraphModel::BA) j["m0"] = g.m0;
        if (g.model == GraphModel::SW) j["p"] = g.rewire_p;
        j["seed"] = g.seed;
    } else {
        j["path"] = src.path;
    }
    return j;
}

} // namespace

ExperimentSpec spec_from_json(const nlohmann::json& j) {
    static const std::vector<std::string> known = {
        "network", "networks", "spread", "beta_mult", "cascades", "repeats", "metrics",
        "seed",    "out",      "threads", "dense_threshold", "auc_exact_max_nodes",
        "auc_samples"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw std::invalid_argument("experiment config: unknown key '" + it.key() + "'");
    }

    ExperimentSpec spec;
    if (j.contains("network")) spec.networks.push_back(network_from_json(j.at("network")));
    if (j.contains("networks"))
        for (const auto& nj : j.at("networks")) spec.networks.push_back(network_from_json(nj));

    if (j.contains("spread")) {
        const auto& sj = j.at("spread");
        spec.spread.model = model_from_string(sj.value("model", "sir"));
        spec.spread.beta = sj.value("beta", 0.0);
        spec.spread.mu = sj.value("mu", spec.spread.model == SpreadModel::SI ? 0.0 : 1.0);
        spec.spread.f = sj.value("f", 0.5);
        spec.spread.theta = sj.value("theta", 0.1);
        if (sj.contains("max_steps")) spec.spread.max_steps = sj.at("max_steps").get<uint32_t>();
        if (sj.contains("beta_mult")) spec.beta_mult = sj.at("beta_mult").get<double>();
    }
    if (j.contains("beta_mult")) spec.beta_mult = j.at("beta_mult").get<double>();
    spec.cascades = j.value("cascades", 50u);
    spec.repeats = j.value("repeats", 50u);
    if (j.contains("metrics") && j.at("metrics").is_array()) {
        for (const auto& mj : j.at("metrics"))
            spec.metrics.push_back(MetricSpec::from_name(mj.get<std::string>()));
    } // "all" or absent -> every metric
    spec.master_seed = j.value("seed", 1ULL);
    spec.output_dir = j.value("out", "");
    spec.threads = j.value("threads", 0u);
    spec.similarity.dense_threshold = j.value("dense_threshold", spec.similarity.dense_threshold);
    spec.auc_exact_max_nodes = j.value("auc_exact_max_nodes", spec.auc_exact_max_nodes);
    spec.auc_samples = j.value("auc_samples", spec.auc_samples);
    return spec;
}

nlohmann::json spec_to_json(const ExperimentSpec& spec) {
    nlohmann::json j;
    j["networks"] = nlohmann::json::array();
    for (const auto& src : spec.networks) j["networks"].push_back(network_to_json(src));
    nlohmann::json sj;
    sj["model"] = model_to_string(spec.spread.model);
    sj["beta"] = spec.spread.beta;
    sj["mu"] = spec.spread.mu;
    sj["f"] = spec.spread.f;
    if (spec.spread.model == SpreadModel::LTM) sj["theta"] = spec.spread.theta;
    if (spec.spread.max_steps) sj["max_steps"] = *spec.spread.max_steps;
    j["spread"] = sj;
    if (spec.beta_mult) j["beta_mult"] = *spec.beta_mult;
    j["cascades"] = spec.cascades;
    j["repeats"] = spec.repeats;
    if (spec.metrics.empty()) {
        j["metrics"] = "all";
    } else {
        j["metrics"] = nlohmann::json::array();
        for (const auto& m : spec.metrics) j["metrics"].push_back(m.name());
    }
    j["seed"] = spec.master_seed;
    if (!spec.output_dir.empty()) j["out"] = spec.output_dir;
    j["threads"] = spec.threads;
    j["dense_threshold"] = spec.similarity.dense_threshold;
    j["auc_exact_max_nodes"] = spec.auc_exact_max_nodes;
    j["auc_samples"] = spec.auc_samples;
    return j;
}

ExperimentSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": invalid JSON: " + e.what());
    }
    // A run manifest carries the spec under "spec"; accept it for replay.
    if (j.contains("spec") && j.at("spec").is_object()) j = j.at("spec");
    try {
        return spec_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": bad config: " + e.what());
    }
}

namespace {

struct PreparedDataset {
    Graph graph;
    SpreadParams params; // beta resolved
    DatasetInfo info;
};

PreparedDataset prepare_dataset(const ExperimentSpec& spec, std::size_t index) {
    const NetworkSource& src = spec.networks[index];
    PreparedDataset ds;
    ds.info.name = default_network_name(src, index);
    try {
        if (src.generator) {
            Rng rng(src.generator->seed);
            ds.graph = generate(*src.generator, rng);
            if (src.generator->model == GraphModel::BA)
                ds.info.seed_edges =
                    ba_seed_graph(src.generator->m0, src.generator->k_avg).num_edges();
        } else {
            ds.graph = load_edge_list_file(src.path);
        }
    } catch (const std::exception& e) {
        throw std::runtime_error("prepare[dataset=" + ds.info.name + "]: " + e.what());
    }

    const DegreeStats stats = degree_stats(ds.graph);
    ds.info.n = ds.graph.num_nodes();
    ds.info.num_edges = ds.graph.num_edges();
    ds.info.mean_degree = stats.mean_degree;
    ds.info.clustering = clustering_coefficient(ds.graph);
    ds.info.beta_c = stats.beta_c;

    ds.params = spec.spread;
    if (spec.beta_mult) {
        if (!stats.beta_c)
            throw std::runtime_error("resolve-beta[dataset=" + ds.info.name +
                                     "]: epidemic threshold undefined");
        const double raw = *spec.beta_mult * *stats.beta_c;
        ds.params.beta = std::min(raw, 1.0);
        ds.info.beta_clamped = raw > 1.0;
    }
    ds.info.beta_resolved = ds.params.beta;

    ds.info.dataset_seed = derive_seed(spec.master_seed, SeedStream::Dataset, index);
    ds.info.repeat_seeds.resize(spec.repeats);
    for (uint32_t k = 0; k < spec.repeats; ++k)
        ds.info.repeat_seeds[k] = derive_seed(ds.info.dataset_seed, SeedStream::Repeat, k);
    return ds;
}

} // namespace

BenchmarkResult run_benchmark(const ExperimentSpec& spec) {
    spec.validate();
    const auto t_start = clock_type::now();

    BenchmarkResult result;
    result.spec = spec;
    const std::vector<MetricSpec> metrics = spec.effective_metrics();
    const std::vector<TimeLagKernel> kernels = kernels_required(metrics);

    std::vector<PreparedDataset> prepared;
    prepared.reserve(spec.networks.size());
    for (std::size_t d = 0; d < spec.networks.size(); ++d)
        prepared.push_back(prepare_dataset(spec, d));
    result.timings_seconds["prepare"] = seconds_since(t_start);

    const std::size_t num_ds = prepared.size();
    const std::size_t num_metrics = metrics.size();
    const std::size_t tasks = num_ds * spec.repeats;
    result.rows.resize(tasks * num_metrics);

    std::atomic<std::size_t> next_task{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::atomic<double> simulate_s{0.0}, score_s{0.0}, evaluate_s{0.0};

    auto worker = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t task = next_task.fetch_add(1);
            if (task >= tasks) return;
            const std::size_t d = task / spec.repeats;
            const uint32_t k = static_cast<uint32_t>(task % spec.repeats);
            const PreparedDataset& ds = prepared[d];
            const uint64_t repeat_seed = ds.info.repeat_seeds[k];
            try {
                auto t0 = clock_type::now();
                CascadeSet cs = run_cascades(ds.graph, ds.params, spec.cascades, repeat_seed);
                simulate_s.fetch_add(seconds_since(t0));

                t0 = clock_type::now();
                CoAdoptionTable table(cs, kernels, spec.similarity);
                if (table.has_kernel(TimeLagKernel::Static) &&
                    table.has_kernel(TimeLagKernel::PowerLaw) &&
                    table.has_kernel(TimeLagKernel::OneStep))
                    check_kernel_dominance(table);
                score_s.fetch_add(seconds_since(t0));

                for (std::size_t m = 0; m < num_metrics; ++m) {
                    t0 = clock_type::now();
                    SimilarityScores scores = table.metric(metrics[m]);
                    score_s.fetch_add(seconds_since(t0));

                    t0 = clock_type::now();
                    ReportRow row;
                    row.dataset = static_cast<uint32_t>(d);
                    row.repeat = k;
                    row.metric = metrics[m];
                    row.precision = precision_at_e(scores, ds.graph);
                    if (ds.graph.num_nodes() <= spec.auc_exact_max_nodes) {
                        row.auc = auc_exact(scores, ds.graph);
                    } else {
                        Rng rng(derive_seed(repeat_seed, SeedStream::Scoring, m));
                        row.auc = auc_sampled(scores, ds.graph, spec.auc_samples, rng);
                    }
                    evaluate_s.fetch_add(seconds_since(t0));
                    result.rows[task * num_metrics + m] = row;
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) {
                    try {
                        std::rethrow_exception(std::current_exception());
                    } catch (const std::exception& e) {
                        first_error = std::make_exception_ptr(std::runtime_error(
                            "repeat[dataset=" + ds.info.name + ", repeat=" + std::to_string(k) +
                            "]: " + e.what()));
                    }
                }
            }
        }
    };

    uint32_t num_threads = spec.threads > 0 ? spec.threads : std::thread::hardware_concurrency();
    num_threads = std::max(1u, std::min<uint32_t>(num_threads, static_cast<uint32_t>(tasks)));
    if (num_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(num_threads);
        for (uint32_t t = 0; t < num_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) std::rethrow_exception(first_error);

    result.timings_seconds["simulate"] = simulate_s.load();
    result.timings_seconds["score"] = score_s.load();
    result.timings_seconds["evaluate"] = evaluate_s.load();

    for (const auto& ds : prepared) result.datasets.push_back(ds.info);

    result.mean_precision.assign(num_ds, std::vector<double>(num_metrics, 0.0));
    result.mean_auc.assign(num_ds, std::vector<double>(num_metrics, 0.0));
    for (std::size_t d = 0; d < num_ds; ++d) {
        for (uint32_t k = 0; k < spec.repeats; ++k) {
            const std::size_t base = (d * spec.repeats + k) * num_metrics;
            for (std::size_t m = 0; m < num_metrics; ++m) {
                result.mean_precision[d][m] += result.rows[base + m].precision;
                result.mean_auc[d][m] += result.rows[base + m].auc;
            }
        }
        for (std::size_t m = 0; m < num_metrics; ++m) {
            result.mean_precision[d][m] /= spec.repeats;
            result.mean_auc[d][m] /= spec.repeats;
        }
    }
    result.metric_mean_rank = mean_rank(result.mean_precision);
    result.metric_mrp = mean_relative_precision(result.mean_precision);
    result.timings_seconds["total_wall"] = seconds_since(t_start);
    return result;
}

nlohmann::json BenchmarkResult::manifest() const {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["spec"] = spec_to_json(spec);
    j["pa_interpretation"] =
        "static PA: s_ij = a_i*a_j; temporal PA: s_ij = a_i*a_j*W_ij where W is the "
        "kernel-weighted co-adoption sum";
    j["seed_derivation"] =
        "splitmix64 chain: dataset = derive(master, 1, d); repeat = derive(dataset, 2, k); "
        "cascade = derive(repeat, 3, item); auc-sampling = derive(repeat, 4, metric_index)";
    j["datasets"] = nlohmann::json::array();
    const auto metrics = spec.effective_metrics();
    for (std::size_t d = 0; d < datasets.size(); ++d) {
        const auto& ds = datasets[d];
        nlohmann::json dj;
        dj["name"] = ds.name;
        dj["n"] = ds.n;
        dj["edges"] = ds.num_edges;
        dj["mean_degree"] = ds.mean_degree;
        dj["clustering"] = ds.clustering;
        if (ds.beta_c) dj["beta_c"] = *ds.beta_c;
        dj["beta_resolved"] = ds.beta_resolved;
        dj["beta_clamped"] = ds.beta_clamped;
        if (ds.seed_edges) dj["seed_edges"] = *ds.seed_edges;
        dj["dataset_seed"] = ds.dataset_seed;
        dj["repeat_seeds"] = ds.repeat_seeds;
        j["datasets"].push_back(dj);
    }
    nlohmann::json agg;
    for (std::size_t m = 0; m < metrics.size(); ++m) {
        agg["mean_rank"][metrics[m].name()] = metric_mean_rank[m];
        agg["mean_relative_precision"][metrics[m].name()] = metric_mrp.values[m];
    }
    agg["excluded_datasets"] = metric_mrp.excluded_datasets;
    j["aggregate"] = agg;
    j["timings_seconds"] = timings_seconds;
    return j;
}

namespace {

std::ofstream open_output(const std::string& path, std::vector<std::string>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    written.push_back(path);
    return out;
}

} // namespace

std::vector<std::string> write_benchmark_outputs(const BenchmarkResult& result,
                                                 const std::string& out_dir) {
    fs::create_directories(out_dir);
    const auto metrics = result.spec.effective_metrics();
    std::vector<std::string> written;
    try {
        {
            auto out = open_output((fs::path(out_dir) / "report.csv").string(), written);
            out << "dataset,metric,kernel,repeat,precision,auc\n";
            for (const auto& row : result.rows) {
                out << result.datasets[row.dataset].name << ',' << class_name(row.metric.cls)
                    << ',' << kernel_name(row.metric.kernel) << ',' << row.repeat << ','
                    << format_double(row.precision) << ',' << format_double(row.auc) << '\n';
            }
        }
        {
            auto out = open_output((fs::path(out_dir) / "means.csv").string(), written);
            out << "dataset,metric,kernel,mean_precision,mean_auc\n";
            for (std::size_t d = 0; d < result.datasets.size(); ++d)
                for (std::size_t m = 0; m < metrics.size(); ++m)
                    out << result.datasets[d].name << ',' << class_name(metrics[m].cls) << ','
                        << kernel_name(metrics[m].kernel) << ','
                        << format_double(result.mean_precision[d][m]) << ','
                        << format_double(result.mean_auc[d][m]) << '\n';
        }
        {
            auto out = open_output((fs::path(out_dir) / "aggregate.csv").string(), written);
            out << "metric,mean_rank,mean_relative_precision\n";
            for (std::size_t m = 0; m < metrics.size(); ++m)
                out << metrics[m].name() << ',' << format_double(result.metric_mean_rank[m])
                    << ',' << format_double(result.metric_mrp.values[m]) << '\n';
        }
        {
            // data behind the precision-vs-clustering comparisons: one row per
            // (dataset, class) with relative differences of the one-step
            // metric against the static and power-law variants
            auto out = open_output((fs::path(out_dir) / "reldiff.csv").string(), written);
            out << "dataset,class,clustering,dP_T1_vs_S,dP_T1_vs_T\n";
            auto metric_index = [&](NormClass cls, TimeLagKernel k) -> std::ptrdiff_t {
                for (std::size_t m = 0; m < metrics.size(); ++m)
                    if (metrics[m].cls == cls && metrics[m].kernel == k)
                        return static_cast<std::ptrdiff_t>(m);
                return -1;
            };
            for (std::size_t d = 0; d < result.datasets.size(); ++d) {
                for (int c = 0; c < kNumClasses; ++c) {
                    const auto cls = static_cast<NormClass>(c);
                    const auto s = metric_index(cls, TimeLagKernel::Static);
                    const auto t = metric_index(cls, TimeLagKernel::PowerLaw);
                    const auto t1 = metric_index(cls, TimeLagKernel::OneStep);
                    if (s < 0 || t < 0 || t1 < 0) continue;
                    const double p1 = result.mean_precision[d][t1];
                    const auto vs_static = relative_difference(p1, result.mean_precision[d][s]);
                    const auto vs_power = relative_difference(p1, result.mean_precision[d][t]);
                    out << result.datasets[d].name << ',' << class_name(cls) << ','
                        << format_double(result.datasets[d].clustering) << ','
                        << (vs_static ? format_double(*vs_static) : "") << ','
                        << (vs_power ? format_double(*vs_power) : "") << '\n';
                }
            }
        }
        {
            auto out = open_output((fs::path(out_dir) / "manifest.json").string(), written);
            out << result.manifest().dump(2) << '\n';
        }
    } catch (...) {
        for (const auto& path : written) {
            std::error_code ec;
            fs::remove(path, ec);
        }
        throw;
    }
    return written;
}

std::vector<SweepRow> sweep_beta(const ExperimentSpec& spec, const std::vector<SweepPoint>& grid) {
    if (grid.empty()) throw std::invalid_argument("sweep_beta: empty grid");
    if (spec.networks.size() != 1)
        throw std::invalid_argument("sweep_beta: exactly one network required");
    std::vector<SweepRow> rows;
    const auto metrics = spec.effective_metrics();
    for (const auto& point : grid) {
        ExperimentSpec ps = spec;
        if (point.multiple_of_critical) {
            ps.beta_mult = point.value;
        } else {
            ps.beta_mult.reset();
            ps.spread.beta = point.value;
        }
        BenchmarkResult r = run_benchmark(ps);
        for (std::size_t m = 0; m < metrics.size(); ++m) {
            SweepRow row;
            row.beta = r.datasets[0].beta_resolved;
            row.metric = metrics[m];
            row.mean_precision = r.mean_precision[0][m];
            row.mean_auc = r.mean_auc[0][m];
            rows.push_back(row);
        }
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "beta,metric,kernel,precision,auc\n";
    for (const auto& row : rows)
        out << format_double(row.beta) << ',' << class_name(row.metric.cls) << ','
            << kernel_name(row.metric.kernel) << ',' << format_double(row.mean_precision) << ','
            << format_double(row.mean_auc) << '\n';
}

std::string stats_csv_header() { return "name,n,E,mean_degree,clustering,beta_c"; }

std::string stats_csv_line(const std::string& name, const Graph& g) {
    const DegreeStats stats = degree_stats(g);
    std::string line = name + ',' + std::to_string(g.num_nodes()) + ',' +
                       std::to_string(g.num_edges()) + ',' + format_double(stats.mean_degree) +
                       ',' + format_double(clustering_coefficient(g)) + ',';
    if (stats.beta_c) line += format_double(*stats.beta_c);
    return line;
}

void write_scores_csv(const SimilarityScores& scores, const std::string& path,
                      std::size_t pa_top_k) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "i,j,score\n";

    if (scores.storage() == SimilarityScores::Storage::Factored) {
        // near-dense product scores: keep only the strongest pairs
        struct Entry {
            NodeId i, j;
            double score;
        };
        std::vector<Entry> entries;
        scores.for_each_nonzero(
            [&](NodeId i, NodeId j, double s) { entries.push_back({i, j, s}); });
        auto better = [](const Entry& a, const Entry& b) {
            if (a.score != b.score) return a.score > b.score;
            return std::pair(a.i, a.j) < std::pair(b.i, b.j);
        };
        if (pa_top_k > 0 && entries.size() > pa_top_k) {
            std::partial_sort(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(pa_top_k),
                              entries.end(), better);
            entries.resize(pa_top_k);
        } else {
            std::sort(entries.begin(), entries.end(), better);
        }
        for (const auto& e : entries)
            out << e.i << ',' << e.j << ',' << format_double(e.score, 17) << '\n';
        return;
    }

    std::vector<std::tuple<NodeId, NodeId, double>> entries;
    scores.for_each_nonzero(
        [&](NodeId i, NodeId j, double s) { entries.emplace_back(i, j, s); });
    std::sort(entries.begin(), entries.end());
    for (const auto& [i, j, s] : entries)
        out << i << ',' << j << ',' << format_double(s, 17) << '\n';
}

SimilarityScores load_scores_csv(const std::string& path, NodeId n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scores csv: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty scores csv");
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line != "i,j,score")
        throw std::runtime_error(path + ": expected header 'i,j,score', got '" + line + "'");
    SimilarityScores scores = SimilarityScores::sparse(n);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        NodeId i, j;
        double s;
        if (std::sscanf(line.c_str(), "%u,%u,%lf", &i, &j, &s) != 3)
            throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                     ": expected i,j,score");
        if (i >= n || j >= n)
            throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                     ": node id out of range");
        scores.set(i, j, s);
    }
    return scores;
}

} // namespace netrecon
