#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "copnum/game.hpp"
#include "copnum/graph.hpp"

namespace copnum {

struct GnpSample {
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    Graph graph;
    bool connected = false;
};

/// G(n, p) from std::mt19937_64 seeded with `seed`. Pairs (u, v), u < v, are
/// visited in lexicographic order; each draws one 64-bit word w and becomes
/// an edge iff (w >> 11) * 2^-53 < p. Bit-exact on every conforming platform.
GnpSample sample_gnp(std::size_t n, double p, std::uint64_t seed);

struct TrialRecord {
    std::size_t trial = 0;
    std::optional<unsigned> cop_number;  // empty when censored
    std::size_t resamples = 0;           // disconnected draws discarded
    bool violation = false;              // c > sqrt(n) ln n
};

struct ExperimentResult {
    std::size_t n = 0;
    double p = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<TrialRecord> records;
    unsigned max_c = 0;
    double mean_c = 0.0;
    double benchmark = 0.0;  // sqrt(n) * ln(n)
    std::size_t violations = 0;
    std::size_t censored = 0;
    std::size_t resamples = 0;
    /// p below the 2.1 ln(n)/n threshold of the random-graph theorem.
    bool below_threshold = false;
};

struct ExperimentOptions {
    unsigned k_max = 4;
    SolveOptions solve;
    unsigned threads = 1;
    /// Disconnected draws allowed per trial before giving up.
    std::size_t max_resamples = 100000;
};

/// Exact cop number of `trials` connected G(n, p) samples. Trial i uses
/// seed + i and redraws from the same generator stream while disconnected.
ExperimentResult cop_number_experiment(std::size_t n, double p, std::size_t trials,
                                       std::uint64_t seed, const ExperimentOptions& options = {});

/// First connected sample drawn from the stream for `seed`.
GnpSample sample_connected_gnp(std::size_t n, double p, std::uint64_t seed,
                               std::size_t max_resamples, std::size_t* resamples = nullptr);

}  // namespace copnum
