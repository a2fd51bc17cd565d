#include "copnum/random_graphs.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

namespace copnum {

namespace {

Graph draw(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

}  // namespace

GnpSample sample_gnp(std::size_t n, double p, std::uint64_t seed) {
    check_probability(p);
    std::mt19937_64 rng(seed);
    GnpSample s{n, p, seed, draw(n, p, rng), false};
    s.connected = is_connected(s.graph);
    return s;
}

GnpSample sample_connected_gnp(std::size_t n, double p, std::uint64_t seed,
                               std::size_t max_resamples, std::size_t* resamples) {
    check_probability(p);
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt <= max_resamples; ++attempt) {
        Graph g = draw(n, p, rng);
        if (is_connected(g)) {
            if (resamples) *resamples = attempt;
            return GnpSample{n, p, seed, std::move(g), true};
        }
    }
    throw std::runtime_error("no connected G(" + std::to_string(n) + ", " + std::to_string(p) +
                             ") sample within " + std::to_string(max_resamples) + " redraws");
}

ExperimentResult cop_number_experiment(std::size_t n, double p, std::size_t trials,
                                       std::uint64_t seed, const ExperimentOptions& options) {
    check_probability(p);
    if (n == 0) throw std::invalid_argument("n must be positive");
    ExperimentResult res;
    res.n = n;
    res.p = p;
    res.trials = trials;
    res.seed = seed;
    res.benchmark = std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n));
    res.below_threshold = n > 1 && p < 2.1 * std::log(static_cast<double>(n)) / static_cast<double>(n);
    res.records.resize(trials);

    auto run = [&](std::size_t i) {
        TrialRecord& rec = res.records[i];
        rec.trial = i;
        auto sample = sample_connected_gnp(n, p, seed + i, options.max_resamples, &rec.resamples);
        for (unsigned k = 1; k <= options.k_max; ++k) {
            try {
                if (solve(sample.graph, k, options.solve).cop_win()) {
                    rec.cop_number = k;
                    break;
                }
            } catch (const BudgetExceeded&) {
                break;
            }
        }
        rec.violation = rec.cop_number && static_cast<double>(*rec.cop_number) > res.benchmark;
    };

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < trials; ++i) run(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < trials; i += threads) run(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    double sum = 0.0;
    std::size_t solved = 0;
    for (const auto& rec : res.records) {
        res.resamples += rec.resamples;
        if (!rec.cop_number) {
            ++res.censored;
            continue;
        }
        ++solved;
        sum += *rec.cop_number;
        res.max_c = std::max(res.max_c, *rec.cop_number);
        res.violations += rec.violation;
    }
    res.mean_c = solved ? sum / static_cast<double>(solved) : 0.0;
    return res;
}

}  // namespace copnum
