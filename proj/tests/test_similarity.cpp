#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "brute_force.hpp"
#include "netrecon/similarity.hpp"
#include "netrecon/spreading.hpp"

using namespace netrecon;

namespace {

// items: alpha0 adopts {0@t0, 1@t1, 2@t2}, alpha1 adopts {0@t0, 1@t1}
CascadeSet two_item_fixture() {
    std::vector<Cascade> cascades(2);
    cascades[0].item = 0;
    cascades[0].infections = {{0, 0}, {1, 1}, {2, 2}};
    cascades[1].item = 1;
    cascades[1].infections = {{0, 0}, {1, 1}};
    return CascadeSet::from_cascades(3, cascades);
}

} // namespace

TEST_CASE("kernel weights") {
    CHECK(kernel_weight(TimeLagKernel::Static, 0) == 1.0);
    CHECK(kernel_weight(TimeLagKernel::Static, 7) == 1.0);
    CHECK(kernel_weight(TimeLagKernel::PowerLaw, 0) == 0.0);
    CHECK(kernel_weight(TimeLagKernel::PowerLaw, 1) == 1.0);
    CHECK(kernel_weight(TimeLagKernel::PowerLaw, 2) == 0.5);
    CHECK(kernel_weight(TimeLagKernel::OneStep, 0) == 0.0);
    CHECK(kernel_weight(TimeLagKernel::OneStep, 1) == 1.0);
    CHECK(kernel_weight(TimeLagKernel::OneStep, 3) == 0.0);
}

TEST_CASE("metric names round-trip") {
    auto metrics = all_metrics();
    CHECK(metrics.size() == 24);
    for (const auto& spec : metrics) CHECK(MetricSpec::from_name(spec.name()) == spec);
    CHECK(MetricSpec::from_name("TCOS1").cls == NormClass::COS);
    CHECK(MetricSpec::from_name("TCOS1").kernel == TimeLagKernel::OneStep);
    CHECK(MetricSpec::from_name("PA").kernel == TimeLagKernel::Static);
    CHECK_THROWS_AS(MetricSpec::from_name("XYZ"), std::invalid_argument);
}

TEST_CASE("weighted co-adoption over shared items") {
    CascadeSet cs = two_item_fixture();
    // nodes 0 and 2 share one item with lag 2
    CHECK(weighted_coadoption(cs, 0, 2, TimeLagKernel::Static) == 1.0);
    CHECK(weighted_coadoption(cs, 0, 2, TimeLagKernel::PowerLaw) == 0.5);
    CHECK(weighted_coadoption(cs, 0, 2, TimeLagKernel::OneStep) == 0.0);
    // nodes 0 and 1 share two items, both lag 1
    CHECK(weighted_coadoption(cs, 0, 1, TimeLagKernel::PowerLaw) == 2.0);
    // no shared items
    std::vector<Cascade> cascades(2);
    cascades[0].item = 0;
    cascades[0].infections = {{0, 0}};
    cascades[1].item = 1;
    cascades[1].infections = {{1, 3}};
    CascadeSet disjoint = CascadeSet::from_cascades(2, cascades);
    CHECK(weighted_coadoption(disjoint, 0, 1, TimeLagKernel::Static) == 0.0);
}

TEST_CASE("weighted co-adoption with mixed lags") {
    // one shared item at times 3 and 4 -> one-step weight 1
    std::vector<Cascade> cascades(2);
    cascades[0].item = 0;
    cascades[0].infections = {{0, 3}, {1, 4}};
    cascades[1].item = 1;
    cascades[1].infections = {{0, 1}, {1, 3}};
    CascadeSet cs = CascadeSet::from_cascades(2, cascades);
    CHECK(weighted_coadoption(cs, 0, 1, TimeLagKernel::OneStep) == 1.0);
    // lags 1 and 2 under the power-law kernel: 1 + 0.5
    CHECK(weighted_coadoption(cs, 0, 1, TimeLagKernel::PowerLaw) == 1.5);
}

TEST_CASE("adoption counts") {
    CascadeSet cs = two_item_fixture();
    CHECK(adoption_count(cs, 0) == 2);
    CHECK(adoption_count(cs, 1) == 2);
    CHECK(adoption_count(cs, 2) == 1);

    // f = 1 forces every node into every cascade
    Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    SpreadParams params;
    params.model = SpreadModel::SIR;
    params.beta = 0.5;
    params.f = 1.0;
    CascadeSet full = run_cascades(g, params, 5, 3);
    for (NodeId u = 0; u < 4; ++u) CHECK(adoption_count(full, u) == 5);
}

TEST_CASE("similarity matrix on the worked two-item example") {
    CascadeSet cs = two_item_fixture();

    auto cn_static = similarity_matrix(cs, {NormClass::CN, TimeLagKernel::Static});
    CHECK(cn_static.score(0, 1) == 2.0);
    CHECK(cn_static.score(0, 2) == 1.0);
    CHECK(cn_static.score(1, 2) == 1.0);

    auto cn_power = similarity_matrix(cs, {NormClass::CN, TimeLagKernel::PowerLaw});
    CHECK(cn_power.score(0, 1) == 2.0);
    CHECK(cn_power.score(0, 2) == 0.5);
    CHECK(cn_power.score(1, 2) == 1.0);

    auto cn_one = similarity_matrix(cs, {NormClass::CN, TimeLagKernel::OneStep});
    CHECK(cn_one.score(0, 1) == 2.0);
    CHECK(cn_one.score(0, 2) == 0.0);
    CHECK(cn_one.score(1, 2) == 1.0);

    auto cos_static = similarity_matrix(cs, {NormClass::COS, TimeLagKernel::Static});
    CHECK(cos_static.score(0, 1) == doctest::Approx(1.0)); // 2 / sqrt(2*2)
}

TEST_CASE("jaccard of identical adoption columns is 1") {
    std::vector<Cascade> cascades(3);
    for (uint32_t a = 0; a < 3; ++a) {
        cascades[a].item = a;
        cascades[a].infections = {{0, a}, {1, a + 1}, {2, 5}};
    }
    CascadeSet cs = CascadeSet::from_cascades(3, cascades);
    auto jac = similarity_matrix(cs, {NormClass::JAC, TimeLagKernel::Static});
    CHECK(jac.score(0, 1) == doctest::Approx(1.0));
    CHECK(jac.score(0, 2) == doctest::Approx(1.0));
}

TEST_CASE("all 24 metrics match the brute-force oracle") {
    Rng rng(2025);
    const auto metrics = all_metrics();
    for (int trial = 0; trial < 60; ++trial) {
        auto data = bruteforce::random_cascades(rng);
        CascadeSet cs = bruteforce::to_cascade_set(data);
        // exercise both storage paths
        for (NodeId threshold : {NodeId{4096}, NodeId{0}}) {
            SimilarityOptions opt{threshold};
            CoAdoptionTable table(cs, kernels_required(metrics), opt);
            for (const auto& spec : metrics) {
                SimilarityScores scores = table.metric(spec);
                for (int i = 0; i < data.n; ++i)
                    for (int j = i + 1; j < data.n; ++j) {
                        double expected = bruteforce::pair_score(data, i, j, spec);
                        CHECK(std::abs(scores.score(i, j) - expected) <= 1e-12);
                    }
            }
        }
    }
}

TEST_CASE("scores are symmetric and nonnegative") {
    Rng rng(88);
    auto data = bruteforce::random_cascades(rng, 8, 4, 5);
    CascadeSet cs = bruteforce::to_cascade_set(data);
    for (const auto& spec : all_metrics()) {
        SimilarityScores scores = similarity_matrix(cs, spec);
        for (int i = 0; i < data.n; ++i)
            for (int j = i + 1; j < data.n; ++j) {
                CHECK(scores.score(i, j) == scores.score(j, i));
                CHECK(scores.score(i, j) >= 0.0);
                CHECK(std::isfinite(scores.score(i, j)));
            }
    }
}

TEST_CASE("static ratio metrics stay in [0, 1]") {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto data = bruteforce::random_cascades(rng);
        CascadeSet cs = bruteforce::to_cascade_set(data);
        for (NormClass cls :
             {NormClass::JAC, NormClass::COS, NormClass::SSI, NormClass::HPI, NormClass::HDI}) {
            SimilarityScores s = similarity_matrix(cs, {cls, TimeLagKernel::Static});
            s.for_each_nonzero([](NodeId, NodeId, double v) {
                CHECK(v >= 0.0);
                CHECK(v <= 1.0 + 1e-15);
            });
        }
    }
}

TEST_CASE("kernel dominance: onestep <= powerlaw <= static for alpha-sum classes") {
    Rng rng(123);
    const NormClass classes[] = {NormClass::CN,  NormClass::JAC, NormClass::COS, NormClass::LHN,
                                 NormClass::SSI, NormClass::HPI, NormClass::HDI};
    for (int trial = 0; trial < 30; ++trial) {
        auto data = bruteforce::random_cascades(rng);
        CascadeSet cs = bruteforce::to_cascade_set(data);
        CoAdoptionTable table(
            cs, {TimeLagKernel::Static, TimeLagKernel::PowerLaw, TimeLagKernel::OneStep}, {});
        for (NormClass cls : classes) {
            auto s = table.metric({cls, TimeLagKernel::Static});
            auto p = table.metric({cls, TimeLagKernel::PowerLaw});
            auto o = table.metric({cls, TimeLagKernel::OneStep});
            for (int i = 0; i < data.n; ++i)
                for (int j = i + 1; j < data.n; ++j) {
                    CHECK(o.score(i, j) <= p.score(i, j));
                    CHECK(p.score(i, j) <= s.score(i, j));
                }
        }
    }
}

TEST_CASE("adding a lag-1 shared item never decreases common-neighbor scores") {
    Rng rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        auto data = bruteforce::random_cascades(rng, 6, 3, 4);
        CascadeSet before = bruteforce::to_cascade_set(data);

        // append one item adopted by nodes 0 and 1 at consecutive times
        auto extended = data;
        extended.m += 1;
        for (int i = 0; i < extended.n; ++i) {
            extended.adopted[i].push_back(0);
            extended.time[i].push_back(0);
        }
        extended.adopted[0].back() = 1;
        extended.time[0].back() = 2;
        extended.adopted[1].back() = 1;
        extended.time[1].back() = 3;
        CascadeSet after = bruteforce::to_cascade_set(extended);

        for (TimeLagKernel kernel :
             {TimeLagKernel::Static, TimeLagKernel::PowerLaw, TimeLagKernel::OneStep}) {
            auto a = similarity_matrix(before, {NormClass::CN, kernel});
            auto b = similarity_matrix(after, {NormClass::CN, kernel});
            CHECK(b.score(0, 1) >= a.score(0, 1));
        }
    }
}

TEST_CASE("dense and sparse storage agree") {
    Rng rng(7);
    auto data = bruteforce::random_cascades(rng, 10, 5, 6);
    CascadeSet cs = bruteforce::to_cascade_set(data);
    for (const auto& spec : all_metrics()) {
        auto dense = similarity_matrix(cs, spec, SimilarityOptions{4096});
        auto sparse = similarity_matrix(cs, spec, SimilarityOptions{0});
        for (int i = 0; i < data.n; ++i)
            for (int j = i + 1; j < data.n; ++j)
                CHECK(dense.score(i, j) == doctest::Approx(sparse.score(i, j)).epsilon(1e-14));
    }
}

TEST_CASE("values_and_zero_count covers every pair exactly once") {
    Rng rng(31);
    auto data = bruteforce::random_cascades(rng, 9, 4, 5);
    CascadeSet cs = bruteforce::to_cascade_set(data);
    for (NodeId threshold : {NodeId{4096}, NodeId{0}}) {
        auto scores =
            similarity_matrix(cs, {NormClass::CN, TimeLagKernel::PowerLaw}, {threshold});
        auto [values, zeros] = scores.values_and_zero_count();
        CHECK(values.size() + zeros == scores.num_pairs());
        double stored_sum = 0;
        for (double v : values) stored_sum += v;
        double direct_sum = 0;
        for (int i = 0; i < data.n; ++i)
            for (int j = i + 1; j < data.n; ++j) direct_sum += scores.score(i, j);
        CHECK(stored_sum == doctest::Approx(direct_sum));
    }
}

TEST_CASE("static pa uses factored storage") {
    CascadeSet cs = two_item_fixture();
    auto pa = similarity_matrix(cs, {NormClass::PA, TimeLagKernel::Static});
    CHECK(pa.storage() == SimilarityScores::Storage::Factored);
    CHECK(pa.score(0, 1) == 4.0); // 2 * 2
    CHECK(pa.score(0, 2) == 2.0);
    // temporal PA scales the count product by the kernel weight sum
    auto tpa1 = similarity_matrix(cs, {NormClass::PA, TimeLagKernel::OneStep});
    CHECK(tpa1.score(0, 1) == 8.0); // 2 * 2 * 2
    CHECK(tpa1.score(0, 2) == 0.0);
}
