#include "netrecon/spreading.hpp"

#include <algorithm>
#include <stdexcept>

namespace netrecon {

void SpreadParams::validate() const {
    if (f <= 0.0 || f > 1.0)
        throw std::invalid_argument("spread params: f must be in (0, 1]");
    if (model == SpreadModel::SIR || model == SpreadModel::SI) {
        if (beta < 0.0 || beta > 1.0)
            throw std::invalid_argument("spread params: beta must be in [0, 1]");
        if (mu < 0.0 || mu > 1.0)
            throw std::invalid_argument("spread params: mu must be in [0, 1]");
    }
    if (model == SpreadModel::LTM) {
        if (theta <= 0.0 || theta > 1.0)
            throw std::invalid_argument("spread params: theta must be in (0, 1]");
    }
}

namespace {

enum : uint8_t { kSusceptible = 0, kInfectious = 1, kRemoved = 2 };

Cascade run_sir_core(const Graph& g, double beta, double mu, double f,
                     std::optional<uint32_t> max_steps, Rng& rng) {
    const NodeId n = g.num_nodes();
    Cascade cascade;
    std::vector<uint8_t> state(n, kSusceptible);
    std::vector<NodeId> infectious;
    for (NodeId u = 0; u < n; ++u) {
        if (rng.bernoulli(f)) {
            state[u] = kInfectious;
            infectious.push_back(u);
            cascade.infections.push_back({u, 0});
        }
    }
    if (beta <= 0.0) return cascade; // nothing can ever spread

    const uint32_t cap = max_steps.value_or(4 * n + 4);
    std::vector<uint8_t> marked(n, 0);
    std::vector<NodeId> newly;
    uint32_t t = 0;
    while (!infectious.empty() && t < cap) {
        newly.clear();
        bool boundary = false; // any infectious-susceptible adjacency this step
        for (NodeId u : infectious) {
            for (NodeId v : g.neighbors(u)) {
                if (state[v] != kSusceptible) continue;
                boundary = true;
                if (rng.bernoulli(beta) && !marked[v]) {
                    marked[v] = 1;
                    newly.push_back(v);
                }
            }
        }
        if (mu >= 1.0) {
            for (NodeId u : infectious) state[u] = kRemoved;
            infectious.clear();
        } else if (mu > 0.0) {
            std::size_t keep = 0;
            for (NodeId u : infectious) {
                if (rng.bernoulli(mu))
                    state[u] = kRemoved;
                else
                    infectious[keep++] = u;
            }
            infectious.resize(keep);
        }
        ++t;
        std::sort(newly.begin(), newly.end());
        for (NodeId v : newly) {
            marked[v] = 0;
            state[v] = kInfectious;
            infectious.push_back(v);
            cascade.infections.push_back({v, t});
        }
        if (newly.empty() && !boundary) break; // no reachable susceptibles remain
    }
    return cascade;
}

} // namespace

Cascade simulate_sir(const Graph& g, const SpreadParams& params, Rng& rng) {
    if (params.model != SpreadModel::SIR)
        throw std::invalid_argument("simulate_sir: params.model must be SIR");
    params.validate();
    return run_sir_core(g, params.beta, params.mu, params.f, params.max_steps, rng);
}

Cascade simulate_si(const Graph& g, const SpreadParams& params, Rng& rng) {
    if (params.model != SpreadModel::SI)
        throw std::invalid_argument("simulate_si: params.model must be SI");
    params.validate();
    return run_sir_core(g, params.beta, 0.0, params.f, params.max_steps, rng);
}

Cascade simulate_ltm(const Graph& g, const SpreadParams& params, Rng& rng) {
    if (params.model != SpreadModel::LTM)
        throw std::invalid_argument("simulate_ltm: params.model must be LTM");
    params.validate();
    const NodeId n = g.num_nodes();
    const double theta = params.theta;
    Cascade cascade;
    std::vector<uint8_t> active(n, 0);
    std::vector<uint32_t> active_neighbors(n, 0);
    std::vector<NodeId> frontier;
    for (NodeId u = 0; u < n; ++u) {
        if (rng.bernoulli(params.f)) {
            active[u] = 1;
            frontier.push_back(u);
            cascade.infections.push_back({u, 0});
        }
    }
    const uint32_t cap = params.max_steps.value_or(4 * n + 4);
    std::vector<uint8_t> touched(n, 0);
    std::vector<NodeId> candidates, next;
    uint32_t t = 0;
    while (!frontier.empty() && t < cap) {
        candidates.clear();
        for (NodeId u : frontier) {
            for (NodeId v : g.neighbors(u)) {
                if (active[v]) continue;
                ++active_neighbors[v];
                if (!touched[v]) {
                    touched[v] = 1;
                    candidates.push_back(v);
                }
            }
        }
        next.clear();
        for (NodeId v : candidates) {
            touched[v] = 0;
            const double k = g.degree(v);
            // weight sum = active_neighbors / degree; small epsilon absorbs
            // rounding in theta itself
            if (static_cast<double>(active_neighbors[v]) / k >= theta - 1e-12) next.push_back(v);
        }
        ++t;
        std::sort(next.begin(), next.end());
        for (NodeId v : next) {
            active[v] = 1;
            cascade.infections.push_back({v, t});
        }
        frontier = next;
    }
    return cascade;
}

Cascade simulate(const Graph& g, const SpreadParams& params, Rng& rng) {
    switch (params.model) {
    case SpreadModel::SIR: return simulate_sir(g, params, rng);
    case SpreadModel::SI: return simulate_si(g, params, rng);
    case SpreadModel::LTM: return simulate_ltm(g, params, rng);
    }
    throw std::invalid_argument("simulate: unknown model");
}

CascadeSet run_cascades(const Graph& g, const SpreadParams& params, uint32_t m, uint64_t seed) {
    if (m < 1) throw std::invalid_argument("run_cascades: m must be >= 1");
    params.validate();
    std::vector<Cascade> cascades(m);
    for (uint32_t alpha = 0; alpha < m; ++alpha) {
        Rng rng(derive_seed(seed, SeedStream::Cascade, alpha));
        cascades[alpha] = simulate(g, params, rng);
        cascades[alpha].item = alpha;
    }
    return CascadeSet::from_cascades(g.num_nodes(), cascades);
}

} // namespace netrecon
