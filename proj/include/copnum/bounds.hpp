#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copnum/game.hpp"
#include "copnum/graph.hpp"

namespace copnum {

/// min degree when girth >= 5 (forests included), else nothing.
std::optional<std::size_t> girth_mindeg_lower(const Graph& g);

/// Right-hand side 1 + D((D-1)^diam - 1)/(D-2) of the Moore bound for
/// maximum degree D > 2, saturating at UINT64_MAX.
std::uint64_t moore_bound(std::size_t max_degree, std::size_t diameter);
/// True when max degree <= 2 or the order respects the Moore bound.
bool satisfies_moore_bound(const Graph& g, const GraphMetrics& m);

/// Smallest prime p with x < p < 2x; throws std::invalid_argument for x <= 1.
std::uint64_t prime_in_interval(std::uint64_t x);

struct WitnessParameters {
    std::size_t n = 0;
    unsigned q = 0;
    std::size_t core_order = 0;  // 2(q^2 + q + 1)
    std::size_t guaranteed_lower_bound = 0;  // q + 1
};

/// Largest constructible q with 2(q^2+q+1) <= n; checks q+1 >= sqrt(n/8)
/// exactly and throws std::logic_error if that ever failed. Needs n >= 72.
WitnessParameters witness_parameters(std::size_t n);

struct WitnessGraph {
    Graph graph;
    WitnessParameters params;
};

/// Projective-plane incidence graph padded with a pendant path to order n.
WitnessGraph witness_graph(std::size_t n);

/// c <= 2 sqrt(n) - 1, evaluated exactly as (c + 1)^2 <= 4n. Throws
/// std::invalid_argument unless g has diameter 2.
bool diameter2_check(const Graph& g, std::size_t c);

struct BoundEntry {
    std::size_t value;
    std::string source;
};

struct BoundReport {
    std::string graph_id;
    std::size_t n = 0;
    std::optional<std::size_t> cop_number;
    std::string method;  // how cop_number was obtained
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    double meyniel_ratio = 0.0;  // c / sqrt(n), using the best known c
    bool extremal = false;       // ratio >= threshold
    bool consistent() const;
};

struct ReportOptions {
    unsigned k_max = 4;
    SolveOptions solve;
    double extremal_threshold = 0.5;
    /// Exact domination number is only attempted up to this order.
    std::size_t domination_limit = 20;
};

BoundReport meyniel_report(const Graph& g, const std::string& graph_id,
                           const ReportOptions& options = {});

/// Isomorphism-invariant code: upper-triangle adjacency bits maximised over
/// vertex orderings that list vertices by non-increasing degree. Order <= 11.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(std::size_t order, std::uint64_t code);

/// All connected graphs of the given order up to isomorphism, sorted by
/// canonical code. Order <= 7.
std::vector<Graph> connected_graphs(std::size_t order);

}  // namespace copnum
