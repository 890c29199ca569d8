#include "netrecon/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace netrecon {

namespace {

uint64_t edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<uint64_t>(u) << 32) | v;
}

} // namespace

Graph Graph::from_edges(NodeId n, std::span<const Edge> edges) {
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop at node " + std::to_string(u));
        if (u >= n || v >= n)
            throw std::invalid_argument("graph: node id out of range: " + std::to_string(std::max(u, v)));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    std::vector<std::size_t> deg(n + 1, 0);
    for (auto [u, v] : g.edges_) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (NodeId u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];
    g.adj_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : g.edges_) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (NodeId u = 0; u < n; ++u)
        std::sort(g.adj_.begin() + g.offsets_[u], g.adj_.begin() + g.offsets_[u + 1]);
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_ || u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '%' || c == '#';
    }
    return true; // blank
}

} // namespace

Graph load_edge_list(std::istream& in, IdMode mode) {
    std::vector<Edge> edges;
    std::unordered_map<std::string, NodeId> ids;
    NodeId max_id = 0;
    std::size_t line_no = 0;
    std::string line;

    auto resolve = [&](const std::string& tok, std::size_t ln) -> NodeId {
        if (mode == IdMode::Remap) {
            return ids.emplace(tok, static_cast<NodeId>(ids.size())).first->second;
        }
        // Dense: token must be a non-negative integer.
        uint64_t value = 0;
        if (tok.empty()) throw std::runtime_error("edge list line " + std::to_string(ln) + ": empty token");
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::runtime_error("edge list line " + std::to_string(ln) +
                                         ": non-integer node id '" + tok + "'");
            value = value * 10 + static_cast<uint64_t>(c - '0');
            if (value > 0xFFFFFFFEULL)
                throw std::runtime_error("edge list line " + std::to_string(ln) + ": node id too large");
        }
        auto id = static_cast<NodeId>(value);
        max_id = std::max(max_id, id);
        return id;
    };

    std::size_t data_lines = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        ++data_lines;
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a >> b))
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected two node tokens");
        NodeId u = resolve(a, line_no);
        NodeId v = resolve(b, line_no);
        if (u == v) continue; // self-loops dropped
        edges.emplace_back(u, v);
    }
    if (data_lines == 0) throw std::runtime_error("edge list: empty input");

    NodeId n = mode == IdMode::Remap ? static_cast<NodeId>(ids.size()) : max_id + 1;
    return Graph::from_edges(n, edges);
}

Graph load_edge_list_file(const std::string& path, IdMode mode) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path);
    try {
        return load_edge_list(in, mode);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_edge_list(g, out);
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    const NodeId n = g.num_nodes();
    if (n == 0) return s;
    double sum = 0, sum2 = 0;
    for (NodeId u = 0; u < n; ++u) {
        double k = g.degree(u);
        sum += k;
        sum2 += k * k;
    }
    s.mean_degree = sum / n;
    s.mean_square_degree = sum2 / n;
    double denom = s.mean_square_degree - s.mean_degree;
    if (denom > 0) s.beta_c = s.mean_degree / denom;
    return s;
}

double clustering_coefficient(const Graph& g) {
    const NodeId n = g.num_nodes();
    if (n == 0) return 0.0;
    double total = 0;
    for (NodeId u = 0; u < n; ++u) {
        const NodeId k = g.degree(u);
        if (k < 2) continue;
        auto nb = g.neighbors(u);
        // Links among u's neighbors, each counted once.
        std::size_t links = 0;
        for (std::size_t a = 0; a < nb.size(); ++a) {
            auto na = g.neighbors(nb[a]);
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (std::binary_search(na.begin(), na.end(), nb[b])) ++links;
        }
        total += 2.0 * static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
    }
    return total / n;
}

double epidemic_threshold(const Graph& g) {
    DegreeStats s = degree_stats(g);
    if (!s.beta_c)
        throw std::domain_error("epidemic threshold undefined: <k^2> - <k> <= 0");
    return *s.beta_c;
}

Graph ba_seed_graph(uint32_t m0, uint32_t k_avg) {
    if (m0 < 1) throw std::invalid_argument("ba_seed_graph: m0 must be >= 1");
    uint32_t d = std::min(k_avg, m0 - 1);
    if (d % 2 == 1 && m0 % 2 == 1) --d; // odd degree on odd node count is impossible
    std::vector<Edge> edges;
    const uint32_t half = d / 2;
    for (uint32_t off = 1; off <= half; ++off)
        for (uint32_t i = 0; i < m0; ++i) edges.emplace_back(i, (i + off) % m0);
    if (d % 2 == 1)
        for (uint32_t i = 0; i < m0 / 2; ++i) edges.emplace_back(i, i + m0 / 2);
    return Graph::from_edges(m0, edges);
}

Graph generate_ba(const GeneratorParams& params, Rng& rng) {
    const NodeId n = params.n;
    const uint32_t m0 = params.m0;
    const uint32_t k = params.k_avg;
    if (k < 1) throw std::invalid_argument("generate_ba: k_avg must be >= 1");
    if (k > m0) throw std::invalid_argument("generate_ba: k_avg must be <= m0");
    if (n <= m0) throw std::invalid_argument("generate_ba: n must be > m0");

    Graph seed = ba_seed_graph(m0, k);
    std::vector<Edge> edges = seed.edges();
    std::unordered_set<uint64_t> keys;
    keys.reserve(edges.size() + static_cast<std::size_t>(n - m0) * k);
    // Each node id appears once per unit of degree; sampling an entry is a
    // degree-proportional roulette wheel.
    std::vector<NodeId> repeated;
    repeated.reserve(2 * edges.size() + 2 * static_cast<std::size_t>(n - m0) * k);
    for (auto [u, v] : edges) {
        keys.insert(edge_key(u, v));
        repeated.push_back(u);
        repeated.push_back(v);
    }

    for (NodeId v = m0; v < n; ++v) {
        uint32_t added = 0;
        while (added < k) {
            NodeId target = repeated.empty()
                                ? rng.uniform_int(v)
                                : repeated[rng.uniform_int(static_cast<uint32_t>(repeated.size()))];
            uint64_t key = edge_key(v, target);
            if (target == v || keys.contains(key)) continue;
            keys.insert(key);
            edges.emplace_back(v, target);
            repeated.push_back(target);
            ++added;
        }
        for (uint32_t i = 0; i < k; ++i) repeated.push_back(v);
    }
    return Graph::from_edges(n, edges);
}

Graph generate_sw(const GeneratorParams& params, Rng& rng) {
    const NodeId n = params.n;
    const uint32_t k = params.k_avg;
    const double p = params.rewire_p;
    if (k < 2) throw std::invalid_argument("generate_sw: k must be >= 2");
    if (n <= k) throw std::invalid_argument("generate_sw: n must be > k");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("generate_sw: p must be in [0, 1]");

    // Lattice edges, kept in construction order; stored as (near, far) so the
    // rewiring step replaces the far endpoint.
    std::vector<Edge> edges;
    std::unordered_set<uint64_t> keys;
    std::vector<uint32_t> deg(n, 0);
    auto try_add = [&](NodeId u, NodeId v) {
        uint64_t key = edge_key(u, v);
        if (u == v || keys.contains(key)) return;
        keys.insert(key);
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    };
    const uint32_t half = k / 2;
    for (uint32_t off = 1; off <= half; ++off)
        for (NodeId i = 0; i < n; ++i) try_add(i, (i + off) % n);
    if (k % 2 == 1)
        for (NodeId i = 0; i < n; i += 2) try_add(i, (i + half + 1) % n);

    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        if (!rng.bernoulli(p)) continue;
        auto [u, v] = edges[idx];
        if (deg[u] >= n - 1) continue; // no valid target exists
        NodeId w;
        do {
            w = rng.uniform_int(n);
        } while (w == u || keys.contains(edge_key(u, w)));
        keys.erase(edge_key(u, v));
        keys.insert(edge_key(u, w));
        --deg[v];
        ++deg[w];
        edges[idx] = {u, w};
    }
    return Graph::from_edges(n, edges);
}

Graph generate(const GeneratorParams& params, Rng& rng) {
    return params.model == GraphModel::BA ? generate_ba(params, rng) : generate_sw(params, rng);
}

} // namespace netrecon
