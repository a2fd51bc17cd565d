#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "copnum/graph.hpp"

namespace oracle {

using copnum::Graph;
using copnum::Vertex;

inline constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

inline std::vector<std::vector<std::size_t>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
    for (Vertex u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (Vertex v = 0; v < n; ++v)
            if (g.has_edge(u, v)) d[u][v] = 1;
    }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
    return d;
}

inline std::size_t diameter(const Graph& g) {
    std::size_t best = 0;
    for (auto& row : floyd_warshall(g))
        for (auto x : row) best = std::max(best, x);
    return best;
}

/// Shortest cycle through each edge: drop the edge, measure what is left.
inline std::optional<std::size_t> girth(const Graph& g) {
    std::optional<std::size_t> best;
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::vector<copnum::Edge> rest;
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (j != i) rest.push_back(edges[j]);
        auto d = floyd_warshall(Graph(g.order(), rest));
        auto len = d[edges[i].first][edges[i].second];
        if (len < kInf && (!best || len + 1 < *best)) best = len + 1;
    }
    return best;
}

inline bool connected_subset(const Graph& g, const std::vector<Vertex>& vs) {
    if (vs.empty()) return true;
    std::set<Vertex> in(vs.begin(), vs.end()), seen{vs[0]};
    std::vector<Vertex> stack{vs[0]};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : in)
            if (g.has_edge(u, w) && seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == in.size();
}

inline std::size_t domination_number(const Graph& g) {
    const std::size_t n = g.order();
    std::size_t best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size >= best) continue;
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) {
            bool hit = mask & (1u << v);
            for (Vertex w = 0; w < n && !hit; ++w) hit = (mask & (1u << w)) && g.has_edge(v, w);
            ok = hit;
        }
        if (ok) best = size;
    }
    return best;
}

inline bool same_edges_under(const Graph& a, const Graph& b, const std::vector<Vertex>& map) {
    if (a.order() != b.order() || map.size() != a.order()) return false;
    std::set<Vertex> image(map.begin(), map.end());
    if (image.size() != map.size()) return false;
    for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = 0; v < a.order(); ++v)
            if (u != v && a.has_edge(u, v) != b.has_edge(map[u], map[v])) return false;
    return true;
}

/// Brute-force isomorphism test over all permutations (small orders only).
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<Vertex> perm(a.order());
    for (Vertex i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
        if (same_edges_under(a, b, perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Game values by value iteration over ordered cop tuples. Each state value
/// is the number of plies to capture; kInf marks robber wins. Starting from
/// kInf everywhere and relaxing until stable gives the least fixed point.
class Minimax {
public:
    Minimax(const Graph& g, unsigned k) : g_(g), k_(k) {
        std::vector<std::vector<Vertex>> tuples{{}};
        for (unsigned i = 0; i < k; ++i) {
            std::vector<std::vector<Vertex>> next;
            for (auto& t : tuples)
                for (Vertex v = 0; v < g.order(); ++v) {
                    auto u = t;
                    u.push_back(v);
                    next.push_back(u);
                }
            tuples = std::move(next);
        }
        tuples_ = tuples;
        for (auto& t : tuples_)
            for (Vertex r = 0; r < g.order(); ++r)
                for (int side : {0, 1}) value_[{t, r, side}] = caught(t, r) ? 0 : kInf;

        for (bool changed = true; changed;) {
            changed = false;
            for (auto& [key, val] : value_) {
                const auto& [t, r, side] = key;
                if (caught(t, r)) continue;
                std::size_t best = side == 0 ? kInf : 0;
                if (side == 0) {
                    for (auto& t2 : cop_moves(t)) best = std::min(best, value_.at({t2, r, 1}));
                } else {
                    for (Vertex r2 : closed(r)) best = std::max(best, value_.at({t, r2, 0}));
                }
                std::size_t v = best >= kInf ? kInf : best + 1;
                if (v < val) {
                    val = v;
                    changed = true;
                }
            }
        }
    }

    /// Plies to capture from (cops, robber, side); nullopt for robber wins.
    std::optional<std::size_t> value(const std::vector<Vertex>& cops, Vertex r, bool cops_to_move) const {
        auto v = value_.at({cops, r, cops_to_move ? 0 : 1});
        if (v >= kInf) return std::nullopt;
        return v;
    }

    /// Worst case over robber placements for the best cop placement.
    std::optional<std::size_t> capture_time() const {
        std::optional<std::size_t> best;
        for (auto& t : tuples_) {
            std::size_t worst = 0;
            for (Vertex r = 0; r < g_.order(); ++r) worst = std::max(worst, value_.at({t, r, 0}));
            if (worst < kInf && (!best || worst < *best)) best = worst;
        }
        return best;
    }

    bool cop_win() const { return capture_time().has_value(); }

    std::vector<Vertex> closed(Vertex v) const {
        std::vector<Vertex> out{v};
        for (Vertex w = 0; w < g_.order(); ++w)
            if (g_.has_edge(v, w)) out.push_back(w);
        return out;
    }

private:
    static bool caught(const std::vector<Vertex>& t, Vertex r) {
        return std::find(t.begin(), t.end(), r) != t.end();
    }

    std::vector<std::vector<Vertex>> cop_moves(const std::vector<Vertex>& t) const {
        std::vector<std::vector<Vertex>> out{{}};
        for (Vertex c : t) {
            std::vector<std::vector<Vertex>> next;
            for (auto& prefix : out)
                for (Vertex w : closed(c)) {
                    auto u = prefix;
                    u.push_back(w);
                    next.push_back(u);
                }
            out = std::move(next);
        }
        return out;
    }

    const Graph& g_;
    unsigned k_;
    std::vector<std::vector<Vertex>> tuples_;
    std::map<std::tuple<std::vector<Vertex>, Vertex, int>, std::size_t> value_;
};

inline unsigned cop_number(const Graph& g, unsigned k_max) {
    for (unsigned k = 1; k <= k_max; ++k)
        if (Minimax(g, k).cop_win()) return k;
    return k_max + 1;
}

/// Induced subgraph on `vs` is a tree and `spine` (a subset) is a path that
/// dominates every vertex of `vs`.
inline bool is_caterpillar(const Graph& g, const std::vector<Vertex>& vs, const std::vector<Vertex>& spine) {
    std::size_t edges = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) edges += g.has_edge(vs[i], vs[j]);
    if (edges + 1 != vs.size() || !connected_subset(g, vs)) return false;
    std::set<Vertex> in(vs.begin(), vs.end());
    for (Vertex s : spine)
        if (!in.count(s)) return false;
    for (std::size_t i = 0; i + 1 < spine.size(); ++i)
        if (!g.has_edge(spine[i], spine[i + 1])) return false;
    for (Vertex v : vs) {
        bool dominated = std::find(spine.begin(), spine.end(), v) != spine.end();
        for (Vertex s : spine) dominated = dominated || g.has_edge(v, s);
        if (!dominated) return false;
    }
    return true;
}

}  // namespace oracle
