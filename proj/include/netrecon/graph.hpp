#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netrecon/rng.hpp"

namespace netrecon {

using NodeId = uint32_t;
using Edge = std::pair<NodeId, NodeId>; // normalized so first < second

// Undirected simple graph: no self-loops, no parallel edges.  Immutable after
// construction and safe to share read-only across threads.
class Graph {
public:
    Graph() = default;

    // Normalizes endpoint order, drops duplicate edges, throws on self-loops
    // or endpoints >= n.  Resulting edge list is sorted.
    static Graph from_edges(NodeId n, std::span<const Edge> edges);

    NodeId num_nodes() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }
    NodeId degree(NodeId u) const {
        return static_cast<NodeId>(offsets_[u + 1] - offsets_[u]);
    }
    bool has_edge(NodeId u, NodeId v) const;

    const std::vector<Edge>& edges() const { return edges_; }

private:
    NodeId n_ = 0;
    std::vector<Edge> edges_;        // sorted, u < v
    std::vector<NodeId> adj_;        // CSR neighbor lists, each sorted
    std::vector<std::size_t> offsets_;
};

enum class IdMode {
    Remap, // arbitrary integer/string tokens, remapped by first appearance
    Dense, // tokens must be non-negative integers, used directly as node ids
};

// Reads "u v" pairs, one edge per line; '%'/'#' comment lines and blank lines
// are skipped, extra columns (weights, timestamps) are ignored.  Duplicate
// edges, reversed duplicates and self-loops are collapsed.  Throws
// std::runtime_error with a line number on malformed input or empty input.
Graph load_edge_list(std::istream& in, IdMode mode = IdMode::Remap);
Graph load_edge_list_file(const std::string& path, IdMode mode = IdMode::Remap);

void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

struct DegreeStats {
    double mean_degree = 0;        // <k>
    double mean_square_degree = 0; // <k^2>
    std::optional<double> beta_c;  // <k>/(<k^2> - <k>), when denominator > 0
};
DegreeStats degree_stats(const Graph& g);

// Average local clustering coefficient.  Nodes with degree < 2 contribute 0.
double clustering_coefficient(const Graph& g);

// Mean-field epidemic threshold <k>/(<k^2> - <k>).  Throws std::domain_error
// when the denominator is not positive (e.g. a graph of isolated dyads).
double epidemic_threshold(const Graph& g);

enum class GraphModel { BA, SW };

struct GeneratorParams {
    GraphModel model = GraphModel::BA;
    NodeId n = 0;
    uint32_t k_avg = 0;    // target mean degree
    uint32_t m0 = 0;       // BA seed-graph size
    double rewire_p = 0.0; // SW rewiring probability
    uint64_t seed = 0;
};

// Circulant seed graph used by the BA generator: each node links to the
// floor(k/2) nearest on each side; if k is odd and m0 even, the diametric
// node as well.  Infeasible parity (k odd, m0 odd) falls back to degree k-1.
// Degree is capped at m0-1, so k >= m0 yields the complete graph.
Graph ba_seed_graph(uint32_t m0, uint32_t k_avg);

// Preferential attachment: starts from ba_seed_graph, then each new node
// attaches k_avg distinct edges with probability proportional to current
// degree (roulette wheel, re-drawing on duplicates).
// Edge count is exactly seed edges + (n - m0) * k_avg.
Graph generate_ba(const GeneratorParams& params, Rng& rng);

// Ring lattice with k nearest neighbors (floor(k/2) per side; odd k adds one
// alternating extra neighbor), then each lattice edge is rewired with
// probability rewire_p to a uniformly random target, rejecting self-loops and
// duplicates.  Rewiring preserves the edge count.
Graph generate_sw(const GeneratorParams& params, Rng& rng);

Graph generate(const GeneratorParams& params, Rng& rng);

} // namespace netrecon
