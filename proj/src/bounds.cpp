#include "copnum/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "copnum/geometry.hpp"
#include "copnum/strategies.hpp"

namespace copnum {

std::optional<std::size_t> girth_mindeg_lower(const Graph& g) {
    auto m = metrics(g);
    if (m.girth < 5) return std::nullopt;
    return m.min_degree;
}

std::uint64_t moore_bound(std::size_t max_degree, std::size_t diameter) {
    if (max_degree <= 2) throw std::invalid_argument("Moore bound needs maximum degree > 2");
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    // 1 + D * sum_{i<diam} (D-1)^i, which equals the closed form.
    std::uint64_t term = 1, sum = 0;
    for (std::size_t i = 0; i < diameter; ++i) {
        if (sum > kMax - term) return kMax;
        sum += term;
        if (term > kMax / (max_degree - 1)) term = kMax;
        else term *= max_degree - 1;
    }
    if (sum > (kMax - 1) / max_degree) return kMax;
    return 1 + max_degree * sum;
}

bool satisfies_moore_bound(const Graph& g, const GraphMetrics& m) {
    if (m.max_degree <= 2 || !m.is_connected) return true;
    return g.order() <= moore_bound(m.max_degree, m.diameter);
}

namespace {

bool is_prime64(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

std::uint64_t prime_in_interval(std::uint64_t x) {
    if (x <= 1) throw std::invalid_argument("need x > 1");
    for (std::uint64_t p = x + 1; p < 2 * x; ++p)
        if (is_prime64(p)) return p;
    throw std::logic_error("no prime in (x, 2x)");  // unreachable for x > 1
}

WitnessParameters witness_parameters(std::size_t n) {
    if (n < 72) throw std::invalid_argument("witness graphs need n >= 72");
    WitnessParameters w;
    w.n = n;
    auto core = [](std::uint64_t q) { return 2 * (q * q + q + 1); };
    std::uint64_t q = isqrt(n / 2) + 1;
    auto constructible = [](std::uint64_t q) {
        if (is_prime64(q)) return true;
        return std::find(std::begin(kTabulatedPrimePowers), std::end(kTabulatedPrimePowers), q) !=
               std::end(kTabulatedPrimePowers);
    };
    while (q > 1 && (core(q) > n || !constructible(q))) --q;
    w.q = static_cast<unsigned>(q);
    w.core_order = core(q);
    w.guaranteed_lower_bound = q + 1;
    // q + 1 >= sqrt(n / 8)  <=>  8 (q + 1)^2 >= n
    if (8 * (q + 1) * (q + 1) < n)
        throw std::logic_error("witness bound q+1 >= sqrt(n/8) fails for n=" + std::to_string(n));
    return w;
}

WitnessGraph witness_graph(std::size_t n) {
    WitnessGraph out;
    out.params = witness_parameters(n);
    if (!field_supported(out.params.q))
        throw std::invalid_argument("no field of order " + std::to_string(out.params.q) +
                                    " available for the witness core");
    auto core = incidence_graph(projective_plane(out.params.q)).graph;
    out.graph = attach_pendant_path(core, n - core.order());
    return out;
}

bool diameter2_check(const Graph& g, std::size_t c) {
    auto m = metrics(g);
    if (!m.is_connected || m.diameter != 2)
        throw std::invalid_argument("graph has diameter " +
                                    (m.is_connected ? std::to_string(m.diameter) : std::string("inf")) +
                                    ", expected 2");
    return (c + 1) * (c + 1) <= 4 * g.order();
}

bool BoundReport::consistent() const {
    std::size_t lo = 0, hi = std::numeric_limits<std::size_t>::max();
    for (auto& b : lower) lo = std::max(lo, b.value);
    for (auto& b : upper) hi = std::min(hi, b.value);
    if (lo > hi) return false;
    if (cop_number && (*cop_number < lo || *cop_number > hi)) return false;
    return true;
}

BoundReport meyniel_report(const Graph& g, const std::string& graph_id, const ReportOptions& options) {
    BoundReport rep;
    rep.graph_id = graph_id;
    rep.n = g.order();
    auto m = metrics(g);
    if (!m.is_connected) throw std::invalid_argument("graph is not connected");

    rep.lower.push_back({1, "trivial"});
    if (m.girth >= 5) rep.lower.push_back({m.min_degree, "girth>=5 min-degree"});

    rep.method = "unsolved";
    for (unsigned k = 1; k <= options.k_max; ++k) {
        try {
            if (solve(g, k, options.solve).cop_win()) {
                rep.cop_number = k;
                rep.method = "retrograde solver";
                break;
            }
            rep.lower.push_back({k + 1, "solver: " + std::to_string(k) + " cops lose"});
        } catch (const BudgetExceeded&) {
            rep.method = "unsolved: budget exceeded at k=" + std::to_string(k);
            break;
        }
    }
    if (!rep.cop_number && rep.method == "unsolved")
        rep.method = "unsolved: more than " + std::to_string(options.k_max) + " cops";

    rep.upper.push_back({frankl_upper_bound(g).bound, "frankl decomposition"});
    if (g.order() <= options.domination_limit)
        rep.upper.push_back({domination_number(g), "domination number"});
    if (m.diameter == 2) rep.upper.push_back({isqrt(4 * g.order()) - 1, "diameter-2 bound"});
    if (rep.cop_number) rep.upper.push_back({*rep.cop_number, "solver"});

    std::size_t best = rep.cop_number.value_or(0);
    if (!rep.cop_number)
        for (auto& b : rep.lower) best = std::max(best, b.value);
    rep.meyniel_ratio = static_cast<double>(best) / std::sqrt(static_cast<double>(g.order()));
    rep.extremal = rep.meyniel_ratio >= options.extremal_threshold;
    return rep;
}

std::uint64_t canonical_code(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 11) throw std::invalid_argument("canonical codes are limited to order 11");
    const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;

    // Position p is filled from the p-th degree class.
    std::vector<Vertex> by_degree(n);
    for (Vertex v = 0; v < n; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> slot_degree(n);
    for (std::size_t p = 0; p < n; ++p) slot_degree[p] = g.degree(by_degree[p]);

    std::uint64_t best = 0;
    bool have_best = false;
    std::vector<Vertex> placed;
    std::vector<bool> used(n, false);
    // Bits are emitted column by column: (0,1), (0,2), (1,2), (0,3), ...
    std::function<void(std::size_t, std::uint64_t, std::size_t)> extend =
        [&](std::size_t p, std::uint64_t code, std::size_t emitted) {
            if (p == n) {
                if (!have_best || code > best) {
                    best = code;
                    have_best = true;
                }
                return;
            }
            for (Vertex v = 0; v < n; ++v) {
                if (used[v] || g.degree(v) != slot_degree[p]) continue;
                std::uint64_t c = code;
                for (std::size_t i = 0; i < p; ++i) c = (c << 1) | (g.has_edge(placed[i], v) ? 1u : 0u);
                std::size_t e = emitted + p;
                if (have_best && c < (best >> (bits - e))) continue;
                used[v] = true;
                placed.push_back(v);
                extend(p + 1, c, e);
                placed.pop_back();
                used[v] = false;
            }
        };
    extend(0, 0, 0);
    return best;
}

Graph graph_from_code(std::size_t order, std::uint64_t code) {
    const std::size_t bits = order * (order - (order ? 1 : 0)) / 2;
    std::vector<Edge> edges;
    std::size_t pos = 0;
    for (Vertex j = 1; j < order; ++j)
        for (Vertex i = 0; i < j; ++i, ++pos)
            if ((code >> (bits - 1 - pos)) & 1u) edges.emplace_back(i, j);
    return Graph(order, edges);
}

std::vector<Graph> connected_graphs(std::size_t order) {
    if (order == 0) return {};
    if (order > 7) throw std::invalid_argument("connected graph enumeration is limited to order 7");
    if (order == 1) return {Graph(1)};
    // Every connected graph has a vertex whose removal keeps it connected,
    // so extending each smaller connected graph by one vertex reaches all.
    std::set<std::uint64_t> codes;
    for (const Graph& base : connected_graphs(order - 1)) {
        auto edges = base.edges();
        const auto v = static_cast<Vertex>(order - 1);
        for (std::uint32_t mask = 1; mask < (1u << (order - 1)); ++mask) {
            auto e = edges;
            for (Vertex u = 0; u < order - 1; ++u)
                if (mask & (1u << u)) e.emplace_back(u, v);
            codes.insert(canonical_code(Graph(order, e)));
        }
    }
    std::vector<Graph> out;
    for (auto code : codes) out.push_back(graph_from_code(order, code));
    return out;
}

}  // namespace copnum
