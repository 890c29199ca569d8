#pragma once

#include <cstdint>
#include <optional>

#include "netrecon/cascade.hpp"
#include "netrecon/graph.hpp"
#include "netrecon/rng.hpp"

namespace netrecon {

enum class SpreadModel { SIR, SI, LTM };

struct SpreadParams {
    SpreadModel model = SpreadModel::SIR;
    double beta = 0.0;  // transmission probability (SIR/SI)
    double mu = 1.0;    // recovery probability (SIR); SI behaves as mu = 0
    double f = 0.5;     // per-node initiator probability
    double theta = 0.1; // activation threshold (LTM)
    std::optional<uint32_t> max_steps; // default 4n for dynamics that may stall

    void validate() const; // throws std::invalid_argument
};

// Discrete-time SIR with synchronous updates: every node is independently an
// initiator with probability f (infected at t = 0); at each step every
// infectious node infects each susceptible neighbor independently with
// probability beta, then recovers with probability mu.  Infections decided at
// step t take effect at t + 1.  Ends when no infectious nodes remain.
Cascade simulate_sir(const Graph& g, const SpreadParams& params, Rng& rng);

// SIR with mu = 0: infected nodes never recover.  Ends when no susceptible
// node is adjacent to an infected one, or after max_steps.
Cascade simulate_si(const Graph& g, const SpreadParams& params, Rng& rng);

// Linear threshold dynamics.  Each undirected edge acts as two directed
// edges; the in-edges of node i carry weight 1/deg(i).  An inactive node
// activates when its active-neighbor weight sum reaches theta.  Deterministic
// given the initiator set; synchronous updates.
Cascade simulate_ltm(const Graph& g, const SpreadParams& params, Rng& rng);

// Dispatch on params.model.
Cascade simulate(const Graph& g, const SpreadParams& params, Rng& rng);

// M independent cascades; the per-cascade RNG stream is derived from
// (seed, item index), so results are reproducible and order-independent.
CascadeSet run_cascades(const Graph& g, const SpreadParams& params, uint32_t m, uint64_t seed);

} // namespace netrecon
