#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "netrecon/evaluation.hpp"
#include "netrecon/graph.hpp"
#include "netrecon/similarity.hpp"
#include "netrecon/spreading.hpp"

namespace netrecon {

inline constexpr const char* kToolName = "netrecon";
inline constexpr const char* kToolVersion = "0.1.0";

// Where a benchmark network comes from: a generator or an edge-list file.
struct NetworkSource {
    std::string name;
    std::optional<GeneratorParams> generator;
    std::string path; // used when generator is absent
};

struct ExperimentSpec {
    std::vector<NetworkSource> networks;
    SpreadParams spread;
    // When set, beta is resolved per network as beta_mult * beta_c, clamped
    // to 1 with a warning flag in the manifest.
    std::optional<double> beta_mult;
    uint32_t cascades = 50; // items per repeat
    uint32_t repeats = 50;
    std::vector<MetricSpec> metrics; // empty means all 24
    uint64_t master_seed = 1;
    std::string output_dir;
    uint32_t threads = 0; // 0 = hardware concurrency
    SimilarityOptions similarity;
    NodeId auc_exact_max_nodes = 5000; // sampled AUC above this
    std::size_t auc_samples = 200000;

    std::vector<MetricSpec> effective_metrics() const {
        return metrics.empty() ? all_metrics() : metrics;
    }
    void validate() const;
};

ExperimentSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const ExperimentSpec& spec);
// Accepts either a plain spec or a run manifest (whose "spec" field is used),
// so a manifest can replay its run directly.
ExperimentSpec load_spec_file(const std::string& path);

struct DatasetInfo {
    std::string name;
    NodeId n = 0;
    std::size_t num_edges = 0;
    double mean_degree = 0;
    double clustering = 0;
    std::optional<double> beta_c;
    double beta_resolved = 0;
    bool beta_clamped = false;
    std::optional<std::size_t> seed_edges; // BA seed graph edge count
    uint64_t dataset_seed = 0;
    std::vector<uint64_t> repeat_seeds;
};

struct ReportRow {
    uint32_t dataset = 0;
    uint32_t repeat = 0;
    MetricSpec metric;
    double precision = 0;
    double auc = 0;
};

struct BenchmarkResult {
    ExperimentSpec spec;
    std::vector<DatasetInfo> datasets;
    std::vector<ReportRow> rows;                     // ordered (dataset, repeat, metric)
    std::vector<std::vector<double>> mean_precision; // [dataset][metric]
    std::vector<std::vector<double>> mean_auc;
    std::vector<double> metric_mean_rank;
    MeanRelativePrecision metric_mrp;
    std::map<std::string, double> timings_seconds;

    nlohmann::json manifest() const;
};

// Full pipeline: load/generate each network, run repeats of (simulate M
// cascades -> score requested metrics -> precision + AUC), then aggregate.
// Repeats run concurrently; outputs do not depend on the thread count.
BenchmarkResult run_benchmark(const ExperimentSpec& spec);

// Writes report.csv, means.csv, aggregate.csv, reldiff.csv and manifest.json
// into out_dir (created if needed).  On failure the files written so far are
// removed.
std::vector<std::string> write_benchmark_outputs(const BenchmarkResult& result,
                                                 const std::string& out_dir);

struct SweepPoint {
    double value = 0;
    bool multiple_of_critical = false;
};

struct SweepRow {
    double beta = 0; // resolved
    MetricSpec metric;
    double mean_precision = 0;
    double mean_auc = 0;
};

// One benchmark per grid point over a single network; rows ordered by grid
// point then metric.
std::vector<SweepRow> sweep_beta(const ExperimentSpec& spec, const std::vector<SweepPoint>& grid);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);

// name,n,E,mean_degree,clustering,beta_c  (beta_c empty when undefined)
std::string stats_csv_header();
std::string stats_csv_line(const std::string& name, const Graph& g);

// Score dump: "i,j,score" with zero-score pairs omitted; for the static
// preferential-attachment metric only the top K pairs are written.
void write_scores_csv(const SimilarityScores& scores, const std::string& path,
                      std::size_t pa_top_k = 0);
SimilarityScores load_scores_csv(const std::string& path, NodeId n);

} // namespace netrecon
