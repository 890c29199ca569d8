#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netrecon/graph.hpp"
#include "netrecon/rng.hpp"
#include "netrecon/similarity.hpp"

namespace netrecon {

// Fraction of true edges among the E top-ranked pairs (E = edge count of the
// truth graph), as the exact expectation under uniform random tie-breaking:
// pairs strictly above the cutoff count fully, the tie group straddling the
// cutoff contributes (remaining slots) * (true edges in group) / (group size).
double precision_at_e(const SimilarityScores& scores, const Graph& truth);

// Probability that a random true edge outscores a random non-edge, ties
// counting one half.  Computed exactly from the rank-sum statistic over all
// pairs.  Throws if the graph has no edges or no non-edges.
double auc_exact(const SimilarityScores& scores, const Graph& truth);

// Monte Carlo estimate of the same quantity, for node counts where the exact
// rank statistic is too expensive.
double auc_sampled(const SimilarityScores& scores, const Graph& truth, std::size_t samples,
                   Rng& rng);

// (a - b) / b; empty when b is zero.
std::optional<double> relative_difference(double a, double b);

// Per-metric mean rank over datasets.  Within each dataset metrics are
// ranked by decreasing precision, ties receiving the average of the ranks
// they span.  precision_table is indexed [dataset][metric].
std::vector<double> mean_rank(const std::vector<std::vector<double>>& precision_table);

struct MeanRelativePrecision {
    std::vector<double> values;                 // per metric
    std::vector<std::size_t> excluded_datasets; // all-zero rows, skipped with a warning
};

// Per-metric mean of P_d(s) / max_s' P_d(s') over datasets.
MeanRelativePrecision mean_relative_precision(
    const std::vector<std::vector<double>>& precision_table);

} // namespace netrecon
