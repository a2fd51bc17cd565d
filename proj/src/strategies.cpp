#include "copnum/strategies.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace copnum {

// PathGuard ----------------------------------------------------------------

PathGuard::PathGuard(const Graph& g, std::vector<Vertex> path)
    : PathGuard(g, std::move(path), NoCheck{}) {
    if (!is_isometric_path(g, path_)) throw std::invalid_argument("path is not isometric");
}

PathGuard PathGuard::unchecked(const Graph& g, std::vector<Vertex> path) {
    return PathGuard(g, std::move(path), NoCheck{});
}

PathGuard::PathGuard(const Graph& g, std::vector<Vertex> path, NoCheck) : path_(std::move(path)) {
    if (path_.empty()) throw std::invalid_argument("path is empty");
    for (Vertex v : path_)
        if (v >= g.order()) throw std::invalid_argument("path vertex out of range");
    for (std::size_t i = 0; i + 1 < path_.size(); ++i)
        if (!g.has_edge(path_[i], path_[i + 1]))
            throw std::invalid_argument("consecutive path vertices are not adjacent");
    from_start_ = bfs_distances(g, path_.front());
    index_on_path_.assign(g.order(), kInfinite);
    for (std::size_t i = 0; i < path_.size(); ++i) index_on_path_[path_[i]] = i;
}

Vertex PathGuard::shadow(Vertex robber) const {
    std::size_t i = std::min(from_start_[robber], path_.size() - 1);
    return path_[i];
}

bool PathGuard::guarding(const GameState& s) const {
    return s.cops.size() == 1 && s.cops.front() == shadow(s.robber);
}

CopConfig PathGuard::place(const Graph&) { return {path_.front()}; }

CopConfig PathGuard::move(const Graph& g, std::span<const GameState> history) {
    const GameState& s = history.back();
    const Vertex cop = s.cops.front();
    const Vertex r = s.robber;
    if (r == cop || g.has_edge(cop, r)) return {r};

    const std::size_t at = index_on_path_[cop];
    if (at == kInfinite) {
        // Off the path: head back toward p_0.
        for (Vertex w : g.neighbors(cop))
            if (from_start_[w] + 1 == from_start_[cop]) return {w};
        return {cop};
    }
    const std::size_t target = index_on_path_[shadow(r)];
    if (target > at) return {path_[at + 1]};
    if (target < at) return {path_[at - 1]};
    return {cop};
}

// VertexGuard --------------------------------------------------------------

VertexGuard::VertexGuard(const Graph& g, Vertex home) : home_(home) {
    if (home >= g.order()) throw std::invalid_argument("home vertex out of range");
    to_home_ = bfs_distances(g, home);
}

CopConfig VertexGuard::move(const Graph& g, std::span<const GameState> history) {
    const GameState& s = history.back();
    const Vertex cop = s.cops.front();
    if (s.robber == cop || g.has_edge(cop, s.robber)) return {s.robber};
    for (Vertex w : g.neighbors(cop))
        if (to_home_[w] + 1 == to_home_[cop]) return {w};
    return {cop};
}

// ParallelClassStrategy ----------------------------------------------------

std::vector<std::uint32_t> class_labels(const LabeledGraph& lg) {
    std::vector<std::uint32_t> out;
    for (const auto& c : lg.line_class)
        if (c) out.push_back(*c);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ParallelClassStrategy::ParallelClassStrategy(const LabeledGraph& lg, std::uint32_t class_label,
                                             std::optional<unsigned> cops)
    : role_(lg.role) {
    const Graph& g = lg.graph;
    const std::size_t n = g.order();
    in_class_.assign(n, false);
    std::vector<Vertex> lines;
    for (Vertex v = 0; v < n; ++v)
        if (lg.role[v] == Role::line && lg.line_class[v] && *lg.line_class[v] == class_label) {
            in_class_[v] = true;
            lines.push_back(v);
        }
    if (lines.empty())
        throw std::invalid_argument("parallel class " + std::to_string(class_label) +
                                    " is missing or was deleted");

    class_line_of_point_.assign(n, static_cast<Vertex>(-1));
    for (Vertex v = 0; v < n; ++v) {
        if (lg.role[v] != Role::point) continue;
        for (Vertex w : g.neighbors(v))
            if (in_class_[w]) class_line_of_point_[v] = w;
        if (class_line_of_point_[v] == static_cast<Vertex>(-1))
            throw std::invalid_argument("class " + std::to_string(class_label) +
                                        " does not cover point vertex " + std::to_string(v));
    }

    const unsigned k = cops.value_or(static_cast<unsigned>(lines.size()));
    if (k == 0 || k > lines.size())
        throw std::invalid_argument("cop count must lie in [1, " + std::to_string(lines.size()) + "]");
    home_.assign(lines.begin(), lines.begin() + k);
}

CopConfig ParallelClassStrategy::move(const Graph& g, std::span<const GameState> history) {
    const GameState& s = history.back();
    CopConfig next = s.cops;
    const Vertex r = s.robber;

    for (auto& c : next)
        if (c == r || g.has_edge(c, r)) {
            c = r;
            std::sort(next.begin(), next.end());
            return next;
        }

    auto occupied = [&](Vertex v) { return std::binary_search(s.cops.begin(), s.cops.end(), v); };
    if (role_[r] == Role::line && !in_class_[r]) {
        // The class line through point P of the robber's line sends its cop to P.
        for (Vertex p : g.neighbors(r)) {
            Vertex home = class_line_of_point_[p];
            if (occupied(home) && !occupied(p)) {
                *std::find(next.begin(), next.end(), home) = p;
                std::sort(next.begin(), next.end());
                return next;
            }
        }
    }
    // Nothing to do: cops on points return to their class lines.
    for (auto& c : next)
        if (role_[c] == Role::point) c = class_line_of_point_[c];
    std::sort(next.begin(), next.end());
    return next;
}

// Frankl decomposition -----------------------------------------------------

FranklBound frankl_upper_bound(const Graph& g) {
    FranklBound out;
    std::deque<std::vector<Vertex>> pending;
    for (auto& comp : components(g)) pending.push_back(std::move(comp));

    while (!pending.empty()) {
        std::vector<Vertex> part = std::move(pending.front());
        pending.pop_front();
        Graph h = induced_subgraph(g, part);
        const std::size_t n = h.order();

        Vertex hub = 0;
        for (Vertex v = 1; v < n; ++v)
            if (h.degree(v) > h.degree(hub)) hub = v;

        DistanceMatrix d(h);
        Vertex a = 0, b = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (d(u, v) > d(a, b)) {
                    a = u;
                    b = v;
                }

        Piece piece;
        std::vector<Vertex> local;
        // Ties go to the neighbourhood.
        if (h.degree(hub) + 1 >= d(a, b) + 1) {
            piece.kind = PieceKind::neighbourhood;
            local.push_back(hub);
            auto nb = h.neighbors(hub);
            local.insert(local.end(), nb.begin(), nb.end());
        } else {
            piece.kind = PieceKind::path;
            local = isometric_path(h, a, b);
        }
        std::vector<bool> removed(n, false);
        for (Vertex v : local) {
            removed[v] = true;
            piece.vertices.push_back(part[v]);
        }
        out.decomposition.pieces.push_back(std::move(piece));

        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v]) rest.push_back(v);
        if (rest.empty()) continue;
        Graph residual = induced_subgraph(h, rest);
        for (auto& comp : components(residual)) {
            std::vector<Vertex> mapped;
            for (Vertex v : comp) mapped.push_back(part[rest[v]]);
            pending.push_back(std::move(mapped));
        }
    }
    out.bound = out.decomposition.pieces.size();
    return out;
}

// Caterpillar extraction ---------------------------------------------------

Caterpillar extract_mdc(const Graph& g) {
    Caterpillar out;
    const std::size_t n = g.order();
    while ((std::size_t{1} << out.log2_benchmark) < n) ++out.log2_benchmark;
    if (n == 0) return out;

    DistanceMatrix d(g);
    Vertex a = 0, b = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (d(u, v) != kUnreachable && (d(a, b) == kUnreachable || d(u, v) > d(a, b))) {
                a = u;
                b = v;
            }
    out.spine = isometric_path(g, a, b);

    std::vector<bool> on_spine(n, false), chosen(n, false);
    for (Vertex v : out.spine) on_spine[v] = chosen[v] = true;
    // One pass suffices: a rejected vertex never becomes admissible later.
    for (Vertex w = 0; w < n; ++w) {
        if (chosen[w]) continue;
        std::size_t spine_nbrs = 0, leaf_nbrs = 0;
        for (Vertex x : g.neighbors(w)) {
            if (on_spine[x]) ++spine_nbrs;
            else if (chosen[x]) ++leaf_nbrs;
        }
        if (spine_nbrs == 1 && leaf_nbrs == 0) chosen[w] = true;
    }
    for (Vertex v = 0; v < n; ++v)
        if (chosen[v]) out.vertices.push_back(v);
    return out;
}

// Guard verification -------------------------------------------------------

GuardVerdict verify_guard(const Graph& g, std::span<const Vertex> subset, CopStrategy& strategy,
                          std::uint64_t warmup) {
    if (!strategy.positional())
        throw std::invalid_argument("guard verification needs a positional strategy");
    const std::size_t n = g.order();
    const unsigned k = strategy.cops();
    const ConfigSpace space(n, k);
    std::vector<bool> in_subset(n, false);
    for (Vertex v : subset) {
        if (v >= n) throw std::invalid_argument("subset vertex out of range");
        in_subset[v] = true;
    }

    using Key = std::uint64_t;  // config index * n + robber
    auto key_of = [n](std::size_t cfg, Vertex r) { return static_cast<Key>(cfg) * n + r; };
    auto contains = [&](std::size_t cfg, Vertex v) {
        auto c = space.config(cfg);
        return std::binary_search(c.begin(), c.end(), v);
    };

    constexpr std::int64_t kUnknown = -1;
    std::vector<std::int64_t> memo(space.size() * n, kUnknown);
    auto step = [&](std::size_t cfg, Vertex r) -> std::size_t {
        auto& slot = memo[key_of(cfg, r)];
        if (slot != kUnknown) return static_cast<std::size_t>(slot);
        auto c = space.config(cfg);
        GameState s{CopConfig(c.begin(), c.end()), r, Side::cops};
        CopConfig next = strategy.move(g, std::span<const GameState>(&s, 1));
        std::sort(next.begin(), next.end());
        if (!is_legal_cop_move(g, s.cops, next))
            throw IllegalMove(s, "illegal move by strategy '" + strategy.name() + "'");
        slot = static_cast<std::int64_t>(space.index(next));
        return static_cast<std::size_t>(slot);
    };

    CopConfig start = strategy.place(g);
    std::sort(start.begin(), start.end());
    if (start.size() != k) throw std::invalid_argument("placement has the wrong number of cops");
    const std::size_t cfg0 = space.index(start);

    std::vector<Key> layer;
    for (Vertex r = 0; r < n; ++r)
        if (!contains(cfg0, r)) layer.push_back(key_of(cfg0, r));

    struct Violation {
        std::size_t layer;
        Key from;
        Vertex entered;
    };
    std::vector<std::vector<Key>> layers;
    std::vector<std::unordered_map<Key, Key>> parent;  // parent[t][state] in layer t-1
    std::vector<std::optional<Violation>> violation;
    std::map<std::vector<Key>, std::size_t> seen;
    constexpr std::size_t kMaxLayers = 100000;

    std::size_t cycle_start = 0;
    for (std::size_t t = 0;; ++t) {
        if (auto it = seen.find(layer); it != seen.end()) {
            cycle_start = it->second;
            break;
        }
        if (t == kMaxLayers) throw std::runtime_error("guard verification did not become periodic");
        seen.emplace(layer, t);

        std::unordered_map<Key, Key> next_parent;
        std::optional<Violation> bad;
        for (Key key : layer) {
            const std::size_t cfg = key / n;
            const auto r = static_cast<Vertex>(key % n);
            const std::size_t cfg1 = step(cfg, r);
            if (contains(cfg1, r)) continue;
            auto visit = [&](Vertex r2) {
                if (contains(cfg1, r2)) return;
                if (in_subset[r2] && !bad && !contains(step(cfg1, r2), r2))
                    bad = Violation{t, key, r2};
                next_parent.emplace(key_of(cfg1, r2), key);
            };
            visit(r);
            for (Vertex r2 : g.neighbors(r)) visit(r2);
        }
        layers.push_back(std::move(layer));
        parent.emplace_back();
        violation.push_back(bad);

        layer.clear();
        for (auto& [child, from] : next_parent) layer.push_back(child);
        std::sort(layer.begin(), layer.end());
        parent.back() = std::move(next_parent);  // parent.back(): layer t -> t+1 links
    }

    auto replay = [&](const Violation& v) {
        std::vector<Key> chain{v.from};
        for (std::size_t t = v.layer; t > 0; --t) chain.push_back(parent[t - 1].at(chain.back()));
        std::reverse(chain.begin(), chain.end());
        std::vector<GameState> play;
        auto state = [&](std::size_t cfg, Vertex r, Side side) {
            auto c = space.config(cfg);
            return GameState{CopConfig(c.begin(), c.end()), r, side};
        };
        for (Key key : chain) {
            const std::size_t cfg = key / n;
            const auto r = static_cast<Vertex>(key % n);
            play.push_back(state(cfg, r, Side::cops));
            play.push_back(state(step(cfg, r), r, Side::robber));
        }
        const std::size_t cfg1 = step(v.from / n, static_cast<Vertex>(v.from % n));
        play.push_back(state(cfg1, v.entered, Side::cops));
        play.push_back(state(step(cfg1, v.entered), v.entered, Side::robber));
        return play;
    };

    GuardVerdict verdict;
    for (std::size_t t = cycle_start; t < layers.size(); ++t)
        if (violation[t]) {
            verdict.status = GuardStatus::fails;
            verdict.violation = replay(*violation[t]);
            return verdict;
        }
    // Violations only in the transient prefix: robber move t+1 is the last bad one.
    std::optional<std::size_t> last;
    for (std::size_t t = 0; t < cycle_start; ++t)
        if (violation[t]) last = t;
    verdict.sufficient_warmup = last ? *last + 1 : 0;
    if (last && *last + 1 > warmup) {
        verdict.status = GuardStatus::warmup_insufficient;
        verdict.violation = replay(*violation[*last]);
    }
    return verdict;
}

}  // namespace copnum
