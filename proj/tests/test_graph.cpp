#include <doctest.h>

#include <sstream>

#include "netrecon/graph.hpp"

using namespace netrecon;

namespace {

Graph from_text(const std::string& text, IdMode mode = IdMode::Remap) {
    std::istringstream in(text);
    return load_edge_list(in, mode);
}

Graph path3() { return from_text("0 1\n1 2\n", IdMode::Dense); }

void check_basic_invariants(const Graph& g) {
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) degree_sum += g.degree(u);
    CHECK(degree_sum == 2 * g.num_edges());
    for (auto [u, v] : g.edges()) {
        CHECK(u < v);
        CHECK(g.has_edge(u, v));
        CHECK(g.has_edge(v, u));
    }
}

} // namespace

TEST_CASE("edge list loader handles a triangle") {
    Graph g = from_text("1 2\n2 3\n3 1\n");
    CHECK(g.num_nodes() == 3);
    CHECK(g.num_edges() == 3);
    check_basic_invariants(g);
}

TEST_CASE("edge list loader collapses duplicates and self-loops") {
    Graph g = from_text("1 2\n2 1\n1 1\n");
    CHECK(g.num_nodes() == 2);
    CHECK(g.num_edges() == 1);
}

TEST_CASE("edge list loader skips comments, blanks and extra columns") {
    Graph g = from_text("% comment\n# also comment\n\n1 2 0.5 99\n  % indented comment\n2 3\n");
    CHECK(g.num_nodes() == 3);
    CHECK(g.num_edges() == 2);
}

TEST_CASE("edge list loader remaps ids by first appearance") {
    Graph g = from_text("alice bob\nbob carol\ncarol alice\n");
    CHECK(g.num_nodes() == 3);
    // alice=0, bob=1, carol=2
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 2));
}

TEST_CASE("edge list loader dense mode keeps integer ids") {
    Graph g = from_text("0 5\n", IdMode::Dense);
    CHECK(g.num_nodes() == 6);
    CHECK(g.num_edges() == 1);
    CHECK(g.degree(3) == 0);
    CHECK_THROWS_AS(from_text("a b\n", IdMode::Dense), std::runtime_error);
}

TEST_CASE("edge list loader reports line numbers on malformed input") {
    try {
        from_text("1 2\nonly_one_token\n");
        FAIL("expected parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("edge list loader rejects empty input") {
    CHECK_THROWS_AS(from_text(""), std::runtime_error);
    CHECK_THROWS_AS(from_text("% only comments\n"), std::runtime_error);
}

TEST_CASE("zachary karate club fixture has the expected size") {
    Graph g = load_edge_list_file(std::string(NETRECON_DATA_DIR) + "/zachary_karate.edges");
    CHECK(g.num_nodes() == 34);
    CHECK(g.num_edges() == 78);
    check_basic_invariants(g);
    // informational values; the table-reported ones are known to be off
    CHECK(clustering_coefficient(g) == doctest::Approx(0.5706).epsilon(0.01));
    CHECK(epidemic_threshold(g) == doctest::Approx(0.147727).epsilon(1e-4));
}

TEST_CASE("edge list writer round-trips") {
    Graph g = from_text("1 2\n2 3\n3 1\n4 1\n");
    std::ostringstream out;
    write_edge_list(g, out);
    Graph h = from_text(out.str(), IdMode::Dense);
    CHECK(h.num_nodes() == g.num_nodes());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("clustering coefficient on canonical graphs") {
    CHECK(clustering_coefficient(from_text("1 2\n2 3\n3 1\n")) == doctest::Approx(1.0));
    CHECK(clustering_coefficient(path3()) == doctest::Approx(0.0));

    // complete graph K5
    std::ostringstream k5;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5 << u << ' ' << v << '\n';
    CHECK(clustering_coefficient(from_text(k5.str(), IdMode::Dense)) == doctest::Approx(1.0));

    // trees have no triangles
    CHECK(clustering_coefficient(from_text("0 1\n0 2\n0 3\n0 4\n", IdMode::Dense)) ==
          doctest::Approx(0.0));
}

TEST_CASE("epidemic threshold") {
    // triangle is 2-regular: 1/(k-1) = 1
    CHECK(epidemic_threshold(from_text("1 2\n2 3\n3 1\n")) == doctest::Approx(1.0));
    // cycle C5, also 2-regular
    CHECK(epidemic_threshold(from_text("0 1\n1 2\n2 3\n3 4\n4 0\n", IdMode::Dense)) ==
          doctest::Approx(1.0));
    // star K_{1,4}: <k>=8/5, <k^2>=4 -> (8/5)/(12/5) = 2/3
    CHECK(epidemic_threshold(from_text("0 1\n0 2\n0 3\n0 4\n", IdMode::Dense)) ==
          doctest::Approx(2.0 / 3.0));
    // isolated dyads: <k^2> = <k> = 1, denominator zero
    CHECK_THROWS_AS(epidemic_threshold(from_text("0 1\n2 3\n", IdMode::Dense)), std::domain_error);
}

TEST_CASE("degree stats satisfy Jensen") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        GeneratorParams p{GraphModel::SW, 40, 4, 0, 0.3, rng.next_u64()};
        Rng gen_rng(p.seed);
        Graph g = generate_sw(p, gen_rng);
        DegreeStats s = degree_stats(g);
        CHECK(s.mean_square_degree >= s.mean_degree * s.mean_degree - 1e-9);
    }
}

TEST_CASE("ba seed graph constructions") {
    // even degree circulant
    Graph s1 = ba_seed_graph(9, 4);
    CHECK(s1.num_edges() == 18);
    for (NodeId u = 0; u < 9; ++u) CHECK(s1.degree(u) == 4);
    // odd target degree on odd m0 falls back to degree k-1
    Graph s2 = ba_seed_graph(9, 5);
    CHECK(s2.num_edges() == 18);
    // odd degree on even m0 uses the diametric link
    Graph s3 = ba_seed_graph(10, 5);
    CHECK(s3.num_edges() == 25);
    for (NodeId u = 0; u < 10; ++u) CHECK(s3.degree(u) == 5);
    // k >= m0 caps at the complete graph
    Graph s4 = ba_seed_graph(5, 4);
    CHECK(s4.num_edges() == 10);
}

TEST_CASE("ba generator edge counts are forced by construction") {
    GeneratorParams p{GraphModel::BA, 10, 2, 3, 0, 7};
    Rng rng(p.seed);
    Graph g = generate_ba(p, rng);
    CHECK(g.num_nodes() == 10);
    CHECK(g.num_edges() == 3 + 7 * 2);
    check_basic_invariants(g);

    GeneratorParams big{GraphModel::BA, 500, 5, 9, 0, 1};
    Rng rng2(big.seed);
    Graph h = generate_ba(big, rng2);
    CHECK(h.num_nodes() == 500);
    CHECK(h.num_edges() == ba_seed_graph(9, 5).num_edges() + 491 * 5);
    check_basic_invariants(h);
}

TEST_CASE("ba generator with complete seed and n = m0 + 1 yields a complete graph") {
    GeneratorParams p{GraphModel::BA, 5, 4, 4, 0, 3};
    Rng rng(p.seed);
    Graph g = generate_ba(p, rng);
    CHECK(g.num_edges() == 10); // K5
    for (NodeId u = 0; u < 5; ++u) CHECK(g.degree(u) == 4);
}

TEST_CASE("ba generator rejects infeasible parameters") {
    Rng rng(1);
    GeneratorParams p{GraphModel::BA, 10, 5, 3, 0, 1}; // k_avg > m0
    CHECK_THROWS_AS(generate_ba(p, rng), std::invalid_argument);
    GeneratorParams q{GraphModel::BA, 3, 2, 3, 0, 1}; // n <= m0
    CHECK_THROWS_AS(generate_ba(q, rng), std::invalid_argument);
}

TEST_CASE("sw generator builds the ring lattice at p = 0") {
    GeneratorParams p{GraphModel::SW, 10, 4, 0, 0.0, 5};
    Rng rng(p.seed);
    Graph g = generate_sw(p, rng);
    CHECK(g.num_edges() == 20);
    for (NodeId u = 0; u < 10; ++u) CHECK(g.degree(u) == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(0, 3));
}

TEST_CASE("sw rewiring preserves the edge count") {
    for (double p : {0.1, 0.5, 1.0}) {
        GeneratorParams params{GraphModel::SW, 10, 4, 0, p, 21};
        Rng rng(params.seed);
        Graph g = generate_sw(params, rng);
        CHECK(g.num_edges() == 20);
        check_basic_invariants(g);
    }
    // odd k: alternating extra edge reaches mean degree k
    GeneratorParams params{GraphModel::SW, 500, 5, 0, 0.1, 2};
    Rng rng(params.seed);
    Graph g = generate_sw(params, rng);
    CHECK(g.num_edges() == 1250);
}

TEST_CASE("sw generator rejects n <= k") {
    Rng rng(1);
    GeneratorParams p{GraphModel::SW, 4, 5, 0, 0.1, 1};
    CHECK_THROWS_AS(generate_sw(p, rng), std::invalid_argument);
}

TEST_CASE("generators are deterministic in the seed") {
    for (auto model : {GraphModel::BA, GraphModel::SW}) {
        GeneratorParams p{model, 60, 4, 5, 0.2, 99};
        Rng r1(p.seed), r2(p.seed), r3(p.seed + 1);
        Graph a = generate(p, r1);
        Graph b = generate(p, r2);
        Graph c = generate(p, r3);
        CHECK(a.edges() == b.edges());
        CHECK(a.edges() != c.edges()); // overwhelmingly likely
    }
}

TEST_CASE("clustering stays in range on random graphs") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        GeneratorParams p{GraphModel::BA, 50, 3, 4, 0, rng.next_u64()};
        Rng gen_rng(p.seed);
        Graph g = generate_ba(p, gen_rng);
        double c = clustering_coefficient(g);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
    }
}
