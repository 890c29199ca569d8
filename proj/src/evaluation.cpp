#include "netrecon/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace netrecon {

namespace {

void check_compatible(const SimilarityScores& scores, const Graph& truth) {
    if (scores.num_nodes() != truth.num_nodes())
        throw std::invalid_argument("evaluation: scores and truth graph node counts differ");
}

double kth_largest(std::vector<double> values, std::size_t k) {
    // k is 1-based
    auto nth = values.begin() + static_cast<std::ptrdiff_t>(k - 1);
    std::nth_element(values.begin(), nth, values.end(), std::greater<>());
    return *nth;
}

// Equal-value groups of the full pair-score multiset (explicit values plus
// implicit zeros), sorted ascending.
std::vector<std::pair<double, std::size_t>> value_groups(std::vector<double> values,
                                                         std::size_t zeros) {
    std::sort(values.begin(), values.end());
    std::vector<std::pair<double, std::size_t>> groups;
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        groups.emplace_back(values[i], j - i);
        i = j;
    }
    if (zeros > 0) {
        auto pos = std::lower_bound(groups.begin(), groups.end(), 0.0,
                                    [](const auto& g, double v) { return g.first < v; });
        if (pos != groups.end() && pos->first == 0.0)
            pos->second += zeros;
        else
            groups.insert(pos, {0.0, zeros});
    }
    return groups;
}

} // namespace

double precision_at_e(const SimilarityScores& scores, const Graph& truth) {
    check_compatible(scores, truth);
    if (truth.num_nodes() < 2) throw std::invalid_argument("precision_at_e: need >= 2 nodes");
    const std::size_t e = truth.num_edges();
    if (e < 1) throw std::invalid_argument("precision_at_e: truth graph has no edges");

    auto [values, zeros] = scores.values_and_zero_count();

    // Score of the E-th ranked pair.  Implicit zeros sit between the positive
    // and negative explicit values in the descending order.
    std::size_t positives = 0;
    for (double v : values)
        if (v > 0.0) ++positives;
    double cutoff;
    if (e <= positives)
        cutoff = kth_largest(values, e);
    else if (e <= positives + zeros)
        cutoff = 0.0;
    else
        cutoff = kth_largest(values, e - zeros);

    std::size_t above = 0, ties = 0;
    for (double v : values) {
        if (v > cutoff)
            ++above;
        else if (v == cutoff)
            ++ties;
    }
    if (0.0 > cutoff) above += zeros;
    if (cutoff == 0.0) ties += zeros;

    std::size_t edges_above = 0, edge_ties = 0;
    for (auto [u, v] : truth.edges()) {
        const double s = scores.score(u, v);
        if (s > cutoff)
            ++edges_above;
        else if (s == cutoff)
            ++edge_ties;
    }

    const double slots = static_cast<double>(e - above);
    double hits = static_cast<double>(edges_above);
    if (edge_ties > 0) hits += slots * static_cast<double>(edge_ties) / static_cast<double>(ties);
    return hits / static_cast<double>(e);
}

double auc_exact(const SimilarityScores& scores, const Graph& truth) {
    check_compatible(scores, truth);
    const std::size_t e = truth.num_edges();
    const std::size_t pairs = scores.num_pairs();
    if (e == 0 || e == pairs)
        throw std::invalid_argument("auc: truth graph needs at least one edge and one non-edge");

    auto [values, zeros] = scores.values_and_zero_count();
    auto groups = value_groups(std::move(values), zeros);

    std::vector<double> edge_scores;
    edge_scores.reserve(e);
    for (auto [u, v] : truth.edges()) edge_scores.push_back(scores.score(u, v));
    std::sort(edge_scores.begin(), edge_scores.end());

    double edge_rank_sum = 0.0;
    std::size_t rank_base = 0; // pairs strictly below the current group
    std::size_t ep = 0;
    for (const auto& [value, count] : groups) {
        std::size_t in_group = 0;
        while (ep < edge_scores.size() && edge_scores[ep] == value) {
            ++in_group;
            ++ep;
        }
        if (in_group > 0) {
            const double avg_rank =
                static_cast<double>(rank_base) + (static_cast<double>(count) + 1.0) / 2.0;
            edge_rank_sum += static_cast<double>(in_group) * avg_rank;
        }
        rank_base += count;
    }

    const double ne = static_cast<double>(pairs - e);
    const double de = static_cast<double>(e);
    return (edge_rank_sum - de * (de + 1.0) / 2.0) / (de * ne);
}

double auc_sampled(const SimilarityScores& scores, const Graph& truth, std::size_t samples,
                   Rng& rng) {
    check_compatible(scores, truth);
    const std::size_t e = truth.num_edges();
    if (e == 0 || e == scores.num_pairs())
        throw std::invalid_argument("auc: truth graph needs at least one edge and one non-edge");
    if (samples == 0) throw std::invalid_argument("auc_sampled: samples must be > 0");

    const NodeId n = truth.num_nodes();
    double total = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        auto [eu, ev] = truth.edges()[rng.uniform_int(static_cast<uint32_t>(e))];
        NodeId i, j;
        do {
            i = rng.uniform_int(n);
            j = rng.uniform_int(n);
        } while (i == j || truth.has_edge(i, j));
        const double se = scores.score(eu, ev);
        const double sn = scores.score(i, j);
        if (se > sn)
            total += 1.0;
        else if (se == sn)
            total += 0.5;
    }
    return total / static_cast<double>(samples);
}

std::optional<double> relative_difference(double a, double b) {
    if (b == 0.0) return std::nullopt;
    return (a - b) / b;
}

namespace {

void check_table(const std::vector<std::vector<double>>& table) {
    if (table.empty() || table.front().empty())
        throw std::invalid_argument("metric table: empty");
    const std::size_t s = table.front().size();
    for (const auto& row : table) {
        if (row.size() != s) throw std::invalid_argument("metric table: ragged rows");
        for (double v : row)
            if (std::isnan(v)) throw std::invalid_argument("metric table: missing cell");
    }
}

} // namespace

std::vector<double> mean_rank(const std::vector<std::vector<double>>& precision_table) {
    check_table(precision_table);
    const std::size_t s = precision_table.front().size();
    std::vector<double> sums(s, 0.0);
    std::vector<std::size_t> order(s);
    for (const auto& row : precision_table) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return row[a] > row[b]; });
        std::size_t i = 0;
        while (i < s) {
            std::size_t j = i;
            while (j < s && row[order[j]] == row[order[i]]) ++j;
            // tied metrics share the average of ranks i+1 .. j (1-based)
            const double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
            for (std::size_t k = i; k < j; ++k) sums[order[k]] += avg;
            i = j;
        }
    }
    for (double& v : sums) v /= static_cast<double>(precision_table.size());
    return sums;
}

MeanRelativePrecision mean_relative_precision(
    const std::vector<std::vector<double>>& precision_table) {
    check_table(precision_table);
    const std::size_t s = precision_table.front().size();
    MeanRelativePrecision result;
    result.values.assign(s, 0.0);
    std::size_t included = 0;
    for (std::size_t d = 0; d < precision_table.size(); ++d) {
        const auto& row = precision_table[d];
        const double mx = *std::max_element(row.begin(), row.end());
        if (mx <= 0.0) {
            result.excluded_datasets.push_back(d);
            continue;
        }
        for (std::size_t k = 0; k < s; ++k) result.values[k] += row[k] / mx;
        ++included;
    }
    if (included == 0)
        throw std::runtime_error("mean_relative_precision: every dataset scored zero");
    for (double& v : result.values) v /= static_cast<double>(included);
    return result;
}

} // namespace netrecon
