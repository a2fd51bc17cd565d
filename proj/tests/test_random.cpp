#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "copnum/random_graphs.hpp"

using namespace copnum;

TEST_CASE("extreme probabilities") {
    auto full = sample_gnp(7, 1.0, 3);
    CHECK(full.graph == named::complete(7));
    CHECK(full.connected);
    auto empty = sample_gnp(7, 0.0, 3);
    CHECK(empty.graph.edge_count() == 0);
    CHECK_FALSE(empty.connected);
    CHECK_THROWS_AS(sample_gnp(5, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_connected_gnp(5, 0.0, 1, 10), std::runtime_error);
}

TEST_CASE("samples are reproducible") {
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
        CHECK(sample_gnp(15, 0.3, seed).graph == sample_gnp(15, 0.3, seed).graph);
    }
    CHECK_FALSE(sample_gnp(15, 0.3, 1).graph == sample_gnp(15, 0.3, 2).graph);
}

TEST_CASE("first sample of seed 1 is frozen") {
    // Pins the generator: std::mt19937_64, pairs in lexicographic order.
    std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                               {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}};
    CHECK(sample_gnp(6, 0.5, 1).graph.edges() == expected);
    std::mt19937_64 rng(1);
    std::vector<Edge> manual;
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < 0.5) manual.emplace_back(u, v);
    CHECK(manual == expected);
}

TEST_CASE("edge density is within three standard deviations") {
    const std::size_t n = 20, trials = 1000;
    const double p = 0.4, pairs = n * (n - 1) / 2.0;
    double edges = 0;
    for (std::size_t i = 0; i < trials; ++i) edges += static_cast<double>(sample_gnp(n, p, 1000 + i).graph.edge_count());
    double total = pairs * trials;
    double density = edges / total;
    double sigma = std::sqrt(p * (1 - p) / total);
    CHECK(std::abs(density - p) < 3 * sigma);
}

TEST_CASE("dense graphs have tiny cop numbers") {
    auto r = cop_number_experiment(10, 0.9, 50, 1);
    CHECK(r.records.size() == 50);
    CHECK(r.violations == 0);
    CHECK(r.censored == 0);
    for (const auto& t : r.records) {
        REQUIRE(t.cop_number);
        CHECK(*t.cop_number >= 1);
        CHECK(*t.cop_number <= 2);
    }
}

TEST_CASE("complete graphs need one cop") {
    auto r = cop_number_experiment(4, 1.0, 3, 9);
    CHECK(r.max_c == 1);
    CHECK(r.mean_c == 1.0);
    CHECK(r.benchmark == doctest::Approx(2.0 * std::log(4.0)));
}

TEST_CASE("sparse samples are resampled until connected and the count is reported") {
    auto r = cop_number_experiment(12, 0.15, 10, 4);
    CHECK(r.below_threshold);
    CHECK(r.resamples > 0);
    std::size_t sum = 0;
    for (auto& t : r.records) sum += t.resamples;
    CHECK(sum == r.resamples);
}

TEST_CASE("experiments are reproducible and thread-independent") {
    ExperimentOptions one, four;
    four.threads = 4;
    auto a = cop_number_experiment(12, 0.35, 20, 77, one);
    auto b = cop_number_experiment(12, 0.35, 20, 77, four);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].cop_number == b.records[i].cop_number);
        CHECK(a.records[i].resamples == b.records[i].resamples);
    }
    CHECK(a.mean_c == b.mean_c);
    CHECK(a.max_c == b.max_c);
}

TEST_CASE("budget overruns are censored") {
    ExperimentOptions opts;
    opts.solve.state_budget = 500;
    auto r = cop_number_experiment(12, 0.2, 5, 3, opts);
    CHECK(r.censored + (r.records.size() - r.censored) == 5);
    for (auto& t : r.records)
        if (!t.cop_number) CHECK_FALSE(t.violation);
}
