#include "netrecon/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netrecon {

double kernel_weight(TimeLagKernel kernel, uint32_t dt) {
    switch (kernel) {
    case TimeLagKernel::Static: return 1.0;
    case TimeLagKernel::PowerLaw: return dt == 0 ? 0.0 : 1.0 / static_cast<double>(dt);
    case TimeLagKernel::OneStep: return dt == 1 ? 1.0 : 0.0;
    }
    throw std::invalid_argument("kernel_weight: unknown kernel");
}

std::string class_name(NormClass cls) {
    switch (cls) {
    case NormClass::CN: return "CN";
    case NormClass::JAC: return "JAC";
    case NormClass::COS: return "COS";
    case NormClass::LHN: return "LHN";
    case NormClass::SSI: return "SSI";
    case NormClass::HPI: return "HPI";
    case NormClass::HDI: return "HDI";
    case NormClass::PA: return "PA";
    }
    throw std::invalid_argument("class_name: unknown class");
}

std::string kernel_name(TimeLagKernel kernel) {
    switch (kernel) {
    case TimeLagKernel::Static: return "static";
    case TimeLagKernel::PowerLaw: return "powerlaw";
    case TimeLagKernel::OneStep: return "onestep";
    }
    throw std::invalid_argument("kernel_name: unknown kernel");
}

std::string MetricSpec::name() const {
    switch (kernel) {
    case TimeLagKernel::Static: return class_name(cls);
    case TimeLagKernel::PowerLaw: return "T" + class_name(cls);
    case TimeLagKernel::OneStep: return "T" + class_name(cls) + "1";
    }
    throw std::invalid_argument("MetricSpec::name: unknown kernel");
}

MetricSpec MetricSpec::from_name(const std::string& name) {
    for (const auto& spec : all_metrics())
        if (spec.name() == name) return spec;
    throw std::invalid_argument("unknown metric name: " + name);
}

std::vector<MetricSpec> all_metrics() {
    std::vector<MetricSpec> specs;
    specs.reserve(kNumClasses * kNumKernels);
    for (int c = 0; c < kNumClasses; ++c)
        for (int k = 0; k < kNumKernels; ++k)
            specs.push_back({static_cast<NormClass>(c), static_cast<TimeLagKernel>(k)});
    return specs;
}

SimilarityScores SimilarityScores::dense(NodeId n) {
    SimilarityScores s(n, Storage::Dense);
    s.dense_.assign(s.num_pairs(), 0.0);
    return s;
}

SimilarityScores SimilarityScores::sparse(NodeId n) {
    return SimilarityScores(n, Storage::Sparse);
}

SimilarityScores SimilarityScores::factored(NodeId n, std::vector<double> node_weights) {
    if (node_weights.size() != n)
        throw std::invalid_argument("SimilarityScores::factored: weight count mismatch");
    SimilarityScores s(n, Storage::Factored);
    s.node_weights_ = std::move(node_weights);
    return s;
}

SimilarityScores SimilarityScores::accumulator(NodeId n, const SimilarityOptions& opt) {
    return n <= opt.dense_threshold ? dense(n) : sparse(n);
}

double SimilarityScores::score(NodeId i, NodeId j) const {
    if (i == j) throw std::invalid_argument("SimilarityScores::score: i == j");
    if (i > j) std::swap(i, j);
    switch (storage_) {
    case Storage::Dense: return dense_[pair_index(i, j)];
    case Storage::Sparse: {
        auto it = sparse_.find(key(i, j));
        return it == sparse_.end() ? 0.0 : it->second;
    }
    case Storage::Factored: return node_weights_[i] * node_weights_[j];
    }
    return 0.0;
}

void SimilarityScores::add(NodeId i, NodeId j, double w) {
    if (i == j) throw std::invalid_argument("SimilarityScores::add: i == j");
    if (w == 0.0) return;
    if (i > j) std::swap(i, j);
    if (storage_ == Storage::Dense)
        dense_[pair_index(i, j)] += w;
    else if (storage_ == Storage::Sparse)
        sparse_[key(i, j)] += w;
    else
        throw std::logic_error("SimilarityScores::add: factored storage is read-only");
}

void SimilarityScores::set(NodeId i, NodeId j, double value) {
    if (i == j) throw std::invalid_argument("SimilarityScores::set: i == j");
    if (i > j) std::swap(i, j);
    if (storage_ == Storage::Dense) {
        dense_[pair_index(i, j)] = value;
    } else if (storage_ == Storage::Sparse) {
        if (value == 0.0)
            sparse_.erase(key(i, j));
        else
            sparse_[key(i, j)] = value;
    } else {
        throw std::logic_error("SimilarityScores::set: factored storage is read-only");
    }
}

void SimilarityScores::for_each_nonzero(
    const std::function<void(NodeId, NodeId, double)>& f) const {
    switch (storage_) {
    case Storage::Dense: {
        std::size_t idx = 0;
        for (NodeId i = 0; i + 1 < n_; ++i)
            for (NodeId j = i + 1; j < n_; ++j, ++idx)
                if (dense_[idx] != 0.0) f(i, j, dense_[idx]);
        break;
    }
    case Storage::Sparse:
        for (const auto& [k, v] : sparse_)
            if (v != 0.0) f(static_cast<NodeId>(k >> 32), static_cast<NodeId>(k & 0xFFFFFFFFu), v);
        break;
    case Storage::Factored:
        for (NodeId i = 0; i + 1 < n_; ++i) {
            if (node_weights_[i] == 0.0) continue;
            for (NodeId j = i + 1; j < n_; ++j)
                if (node_weights_[j] != 0.0) f(i, j, node_weights_[i] * node_weights_[j]);
        }
        break;
    }
}

std::pair<std::vector<double>, std::size_t> SimilarityScores::values_and_zero_count() const {
    std::vector<double> values;
    switch (storage_) {
    case Storage::Dense: return {dense_, 0};
    case Storage::Sparse: {
        values.reserve(sparse_.size());
        for (const auto& [k, v] : sparse_)
            if (v != 0.0) values.push_back(v);
        return {std::move(values), num_pairs() - values.size()};
    }
    case Storage::Factored: {
        values.reserve(num_pairs());
        for (NodeId i = 0; i + 1 < n_; ++i)
            for (NodeId j = i + 1; j < n_; ++j)
                values.push_back(node_weights_[i] * node_weights_[j]);
        return {std::move(values), 0};
    }
    }
    return {std::move(values), 0};
}

std::size_t SimilarityScores::stored_count() const {
    switch (storage_) {
    case Storage::Dense: return dense_.size();
    case Storage::Sparse: return sparse_.size();
    case Storage::Factored: return num_pairs();
    }
    return 0;
}

double weighted_coadoption(const CascadeSet& cs, NodeId i, NodeId j, TimeLagKernel kernel) {
    if (i == j) throw std::invalid_argument("weighted_coadoption: i == j");
    auto a = cs.adoptions(i);
    auto b = cs.adoptions(j);
    double w = 0.0;
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x].first < b[y].first) {
            ++x;
        } else if (b[y].first < a[x].first) {
            ++y;
        } else {
            uint32_t ti = a[x].second, tj = b[y].second;
            w += kernel_weight(kernel, ti > tj ? ti - tj : tj - ti);
            ++x;
            ++y;
        }
    }
    return w;
}

uint32_t adoption_count(const CascadeSet& cs, NodeId i) { return cs.adoption_count(i); }

CoAdoptionTable::CoAdoptionTable(const CascadeSet& cs, const std::vector<TimeLagKernel>& kernels,
                                 const SimilarityOptions& opt)
    : n_(cs.num_nodes()), counts_(cs.num_nodes(), 0) {
    bool want[kNumKernels] = {false, false, false};
    for (TimeLagKernel k : kernels) {
        int idx = static_cast<int>(k);
        if (!want[idx]) {
            want[idx] = true;
            weights_[idx].emplace(SimilarityScores::accumulator(n_, opt));
        }
    }
    for (NodeId i = 0; i < n_; ++i) counts_[i] = cs.adoption_count(i);

    auto* stat = want[0] ? &*weights_[0] : nullptr;
    auto* power = want[1] ? &*weights_[1] : nullptr;
    auto* onestep = want[2] ? &*weights_[2] : nullptr;
    for (uint32_t alpha = 0; alpha < cs.num_items(); ++alpha) {
        auto adopters = cs.item(alpha); // sorted by node id
        for (std::size_t a = 0; a + 1 < adopters.size(); ++a) {
            for (std::size_t b = a + 1; b < adopters.size(); ++b) {
                const NodeId i = adopters[a].node, j = adopters[b].node;
                const uint32_t ti = adopters[a].time, tj = adopters[b].time;
                const uint32_t dt = ti > tj ? ti - tj : tj - ti;
                if (stat) stat->add(i, j, 1.0);
                if (power && dt > 0) power->add(i, j, 1.0 / static_cast<double>(dt));
                if (onestep && dt == 1) onestep->add(i, j, 1.0);
            }
        }
    }
}

bool CoAdoptionTable::has_kernel(TimeLagKernel kernel) const {
    return weights_[static_cast<int>(kernel)].has_value();
}

const SimilarityScores& CoAdoptionTable::weights(TimeLagKernel kernel) const {
    const auto& slot = weights_[static_cast<int>(kernel)];
    if (!slot) throw std::logic_error("CoAdoptionTable: kernel not accumulated");
    return *slot;
}

SimilarityScores CoAdoptionTable::metric(const MetricSpec& spec) const {
    const auto& counts = counts_;

    if (spec.cls == NormClass::PA) {
        if (spec.kernel == TimeLagKernel::Static) {
            // pure product of adoption counts
            std::vector<double> w(counts.begin(), counts.end());
            return SimilarityScores::factored(n_, std::move(w));
        }
        // count-product scaled by the kernel-weighted co-adoption count;
        // symmetric and zero for pairs that never co-adopt
        const SimilarityScores& w = weights(spec.kernel);
        SimilarityScores out = w;
        w.for_each_nonzero([&](NodeId i, NodeId j, double v) {
            out.set(i, j, v * static_cast<double>(counts[i]) * static_cast<double>(counts[j]));
        });
        return out;
    }

    const SimilarityScores& w = weights(spec.kernel);
    if (spec.cls == NormClass::CN) return w;

    const SimilarityScores* static_counts = nullptr;
    if (spec.cls == NormClass::JAC) static_counts = &weights(TimeLagKernel::Static);

    SimilarityScores out = w;
    w.for_each_nonzero([&](NodeId i, NodeId j, double v) {
        const double ai = counts[i], aj = counts[j];
        double denom = 0.0;
        switch (spec.cls) {
        case NormClass::JAC: denom = ai + aj - static_counts->score(i, j); break;
        case NormClass::COS: denom = std::sqrt(ai * aj); break;
        case NormClass::LHN: denom = ai * aj; break;
        case NormClass::SSI:
            denom = ai + aj;
            v *= 2.0;
            break;
        case NormClass::HPI: denom = std::min(ai, aj); break;
        case NormClass::HDI: denom = std::max(ai, aj); break;
        default: throw std::logic_error("unexpected class");
        }
        out.set(i, j, denom > 0.0 ? v / denom : 0.0);
    });
    return out;
}

std::vector<TimeLagKernel> kernels_required(const std::vector<MetricSpec>& metrics) {
    bool want[kNumKernels] = {false, false, false};
    for (const auto& spec : metrics) {
        if (spec.cls == NormClass::PA && spec.kernel == TimeLagKernel::Static) continue;
        want[static_cast<int>(spec.kernel)] = true;
        if (spec.cls == NormClass::JAC) want[static_cast<int>(TimeLagKernel::Static)] = true;
    }
    std::vector<TimeLagKernel> kernels;
    for (int k = 0; k < kNumKernels; ++k)
        if (want[k]) kernels.push_back(static_cast<TimeLagKernel>(k));
    return kernels;
}

void check_kernel_dominance(const CoAdoptionTable& table) {
    const SimilarityScores& stat = table.weights(TimeLagKernel::Static);
    const SimilarityScores& power = table.weights(TimeLagKernel::PowerLaw);
    const SimilarityScores& onestep = table.weights(TimeLagKernel::OneStep);
    // static weights are a superset of the temporal ones
    stat.for_each_nonzero([&](NodeId i, NodeId j, double s) {
        const double p = power.score(i, j);
        const double o = onestep.score(i, j);
        if (!(o <= p && p <= s))
            throw std::logic_error("kernel dominance violated at pair (" + std::to_string(i) +
                                   ", " + std::to_string(j) + ")");
    });
}

SimilarityScores similarity_matrix(const CascadeSet& cs, const MetricSpec& spec,
                                   const SimilarityOptions& opt) {
    if (cs.num_nodes() < 2)
        throw std::invalid_argument("similarity_matrix: need at least two nodes");
    CoAdoptionTable table(cs, kernels_required({spec}), opt);
    return table.metric(spec);
}

} // namespace netrecon
