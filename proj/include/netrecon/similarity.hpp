#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "netrecon/cascade.hpp"

namespace netrecon {

// Weighting of the infection-time lag |t_i - t_j| in similarity numerators.
enum class TimeLagKernel : int {
    Static = 0,   // 1 for every lag
    PowerLaw = 1, // 1/lag, 0 at lag 0
    OneStep = 2,  // 1 iff lag == 1
};

enum class NormClass : int { CN = 0, JAC, COS, LHN, SSI, HPI, HDI, PA };

inline constexpr int kNumKernels = 3;
inline constexpr int kNumClasses = 8;

double kernel_weight(TimeLagKernel kernel, uint32_t dt);

// One of the 24 (class, kernel) combinations.  Display names follow the
// usual convention: X for static, TX for power-law, TX1 for one-step.
struct MetricSpec {
    NormClass cls = NormClass::CN;
    TimeLagKernel kernel = TimeLagKernel::Static;

    std::string name() const;
    static MetricSpec from_name(const std::string& name); // throws on unknown names
    friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

// All 24 metrics, grouped by class, kernels in Static/PowerLaw/OneStep order.
std::vector<MetricSpec> all_metrics();
std::string class_name(NormClass cls);
std::string kernel_name(TimeLagKernel kernel);

struct SimilarityOptions {
    // Dense upper-triangular storage up to this node count, sparse pair map
    // above it.
    NodeId dense_threshold = 4096;
};

// Symmetric nonnegative score per unordered node pair.  Three storage modes:
// dense upper-triangular array, sparse map with implicit zeros, and a
// factored node-weight product (used by the static preferential-attachment
// score, which is nonzero for nearly all pairs).
class SimilarityScores {
public:
    enum class Storage { Dense, Sparse, Factored };

    static SimilarityScores dense(NodeId n);
    static SimilarityScores sparse(NodeId n);
    static SimilarityScores factored(NodeId n, std::vector<double> node_weights);
    static SimilarityScores accumulator(NodeId n, const SimilarityOptions& opt);

    NodeId num_nodes() const { return n_; }
    std::size_t num_pairs() const {
        return static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    }
    Storage storage() const { return storage_; }

    double score(NodeId i, NodeId j) const;
    void add(NodeId i, NodeId j, double w);
    void set(NodeId i, NodeId j, double value);

    // Calls f(i, j, score) for every stored pair with a nonzero score.
    // Factored storage enumerates all pairs with both weights nonzero.
    void for_each_nonzero(const std::function<void(NodeId, NodeId, double)>& f) const;

    // All explicitly represented values plus the count of implicit zeros;
    // together they cover every unordered pair exactly once.  Dense and
    // factored storage materialize everything (implicit count 0).
    std::pair<std::vector<double>, std::size_t> values_and_zero_count() const;

    std::size_t stored_count() const;

private:
    explicit SimilarityScores(NodeId n, Storage s) : n_(n), storage_(s) {}

    static uint64_t key(NodeId i, NodeId j) {
        return (static_cast<uint64_t>(i) << 32) | j;
    }
    std::size_t pair_index(NodeId i, NodeId j) const {
        return static_cast<std::size_t>(i) * (2 * static_cast<std::size_t>(n_) - i - 1) / 2 +
               (j - i - 1);
    }

    NodeId n_;
    Storage storage_;
    std::vector<double> dense_;
    std::unordered_map<uint64_t, double> sparse_;
    std::vector<double> node_weights_;
};

// Kernel-weighted co-adoption count W_ij = sum over shared items of
// w(|t_i - t_j|), evaluated directly from the two nodes' adoption lists.
double weighted_coadoption(const CascadeSet& cs, NodeId i, NodeId j, TimeLagKernel kernel);

uint32_t adoption_count(const CascadeSet& cs, NodeId i);

// Shared accumulation for computing many metrics from one cascade set: a
// single pass over items joins every pair of adopters per item, so the cost
// scales with the sum of squared cascade sizes rather than with n^2.
class CoAdoptionTable {
public:
    CoAdoptionTable(const CascadeSet& cs, const std::vector<TimeLagKernel>& kernels,
                    const SimilarityOptions& opt = {});

    const SimilarityScores& weights(TimeLagKernel kernel) const;
    bool has_kernel(TimeLagKernel kernel) const;
    const std::vector<uint32_t>& adoption_counts() const { return counts_; }

    // Applies the class normalization to the accumulated weights.
    SimilarityScores metric(const MetricSpec& spec) const;

private:
    NodeId n_;
    std::array<std::optional<SimilarityScores>, kNumKernels> weights_;
    std::vector<uint32_t> counts_;
};

// The kernels CoAdoptionTable must accumulate to serve these metrics
// (the Jaccard denominator needs static co-adoption counts).
std::vector<TimeLagKernel> kernels_required(const std::vector<MetricSpec>& metrics);

// Checks the pointwise ordering W_onestep <= W_powerlaw <= W_static for every
// accumulated pair; throws std::logic_error on a violation.  Because all
// non-PA normalizations divide by kernel-independent denominators, this
// implies the same ordering for their scores.  Requires all three kernels.
void check_kernel_dominance(const CoAdoptionTable& table);

SimilarityScores similarity_matrix(const CascadeSet& cs, const MetricSpec& spec,
                                   const SimilarityOptions& opt = {});

} // namespace netrecon
