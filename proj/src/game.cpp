#include "copnum/game.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace copnum {

bool GameState::captured() const {
    return std::find(cops.begin(), cops.end(), robber) != cops.end();
}

std::string to_string(const GameState& s) {
    std::ostringstream out;
    out << "cops=[";
    for (std::size_t i = 0; i < s.cops.size(); ++i) out << (i ? "," : "") << s.cops[i];
    out << "] robber=" << s.robber << " to_move=" << (s.to_move == Side::cops ? "cops" : "robber");
    return out.str();
}

BudgetExceeded::BudgetExceeded(std::uint64_t states, std::uint64_t budget)
    : std::runtime_error("state space of " + std::to_string(states) + " states exceeds budget of " +
                         std::to_string(budget)),
      states_(states) {}

IllegalMove::IllegalMove(const GameState& at, const std::string& what)
    : std::runtime_error(what + " at " + to_string(at)), state_(at) {}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t multisets(std::uint64_t n, unsigned k) {
    // C(n+k-1, k), computed incrementally; each prefix product is integral.
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        std::uint64_t num = n + i - 1;
        std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
        std::uint64_t rr = r / g, ii = i / g;
        std::uint64_t nn = num / ii;  // ii divides num * rr and gcd(rr, ii) == 1
        r = saturating_mul(rr, nn);
        if (r == std::numeric_limits<std::uint64_t>::max()) return r;
    }
    return r;
}

}  // namespace

std::uint64_t state_count(std::size_t n, unsigned k) {
    return saturating_mul(saturating_mul(multisets(n, k), n), 2);
}

ConfigSpace::ConfigSpace(std::size_t n, unsigned k) : n_(n), k_(k) {
    if (k == 0) throw std::invalid_argument("at least one cop is required");
    if (n == 0) throw std::invalid_argument("graph has no vertices");
    count_ = static_cast<std::size_t>(multisets(n, k));

    // binom_[m][j] = C(m, j) for m < n + k, j <= k.
    binom_.assign(n + k, std::vector<std::size_t>(k + 1, 0));
    for (std::size_t m = 0; m < n + k; ++m) {
        binom_[m][0] = 1;
        for (unsigned j = 1; j <= k && j <= m; ++j)
            binom_[m][j] = binom_[m - 1][j - 1] + (j <= m - 1 ? binom_[m - 1][j] : 0);
    }

    flat_.resize(count_ * k);
    lex_of_colex_.resize(count_);
    std::vector<Vertex> cur(k, 0);
    for (std::size_t lex = 0;; ++lex) {
        std::copy(cur.begin(), cur.end(), flat_.begin() + static_cast<std::ptrdiff_t>(lex * k));
        std::size_t colex = 0;
        for (unsigned i = 0; i < k; ++i) colex += binom_[cur[i] + i][i + 1];
        lex_of_colex_[colex] = static_cast<std::uint32_t>(lex);

        int p = static_cast<int>(k) - 1;
        while (p >= 0 && cur[p] == n - 1) --p;
        if (p < 0) break;
        ++cur[p];
        for (unsigned i = p + 1; i < k; ++i) cur[i] = cur[p];
    }
}

std::size_t ConfigSpace::index(std::span<const Vertex> sorted) const {
    std::size_t colex = 0;
    for (unsigned i = 0; i < k_; ++i) colex += binom_[sorted[i] + i][i + 1];
    return lex_of_colex_[colex];
}

namespace {

enum : std::size_t { kCopsToMove = 0, kRobberToMove = 1 };

inline std::size_t pack(std::size_t cfg, std::size_t n, Vertex r, std::size_t side) {
    return (cfg * n + r) * 2 + side;
}

/// Distinct configurations reachable in one joint cop move (the relation is
/// symmetric, so these are also the predecessors).
class JointMoves {
public:
    JointMoves(const Graph& g, const ConfigSpace& space) : space_(space) {
        closed_.resize(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            closed_[v].push_back(v);
            auto nb = g.neighbors(v);
            closed_[v].insert(closed_[v].end(), nb.begin(), nb.end());
        }
        choice_.resize(space.cops());
        tuple_.resize(space.cops());
        sorted_.resize(space.cops());
    }

    const std::vector<std::size_t>& of(std::span<const Vertex> cfg) {
        cfg_ = cfg;
        out_.clear();
        recurse(0);
        std::sort(out_.begin(), out_.end());
        out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
        return out_;
    }

private:
    void recurse(unsigned i) {
        const unsigned k = space_.cops();
        if (i == k) {
            sorted_ = tuple_;
            std::sort(sorted_.begin(), sorted_.end());
            out_.push_back(space_.index(sorted_));
            return;
        }
        const auto& opts = closed_[cfg_[i]];
        // Cops sharing a vertex are interchangeable: only non-decreasing
        // choice indices among them.
        std::size_t start = (i > 0 && cfg_[i] == cfg_[i - 1]) ? choice_[i - 1] : 0;
        for (std::size_t c = start; c < opts.size(); ++c) {
            choice_[i] = c;
            tuple_[i] = opts[c];
            recurse(i + 1);
        }
    }

    const ConfigSpace& space_;
    std::vector<std::vector<Vertex>> closed_;
    std::span<const Vertex> cfg_;
    std::vector<std::size_t> choice_;
    std::vector<Vertex> tuple_, sorted_;
    std::vector<std::size_t> out_;
};

}  // namespace

SolveResult solve(const Graph& g, unsigned k, const SolveOptions& options) {
    if (k == 0) throw std::invalid_argument("at least one cop is required");
    if (g.order() == 0) throw std::invalid_argument("graph has no vertices");
    if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
    const std::uint64_t total = state_count(g.order(), k);
    if (total > options.state_budget) throw BudgetExceeded(total, options.state_budget);

    SolveResult res;
    res.graph_ = std::make_shared<const Graph>(g);
    res.space_ = std::make_shared<const ConfigSpace>(g.order(), k);
    const ConfigSpace& space = *res.space_;
    const std::size_t n = g.order();
    const std::size_t configs = space.size();

    auto& dtc = res.dtc_;
    dtc.assign(total, SolveResult::kRobberWin);
    // Robber-to-move states still waiting on this many unresolved replies.
    std::vector<std::uint32_t> pending(configs * n);
    std::vector<std::size_t> queue;
    queue.reserve(total / 4);
    std::vector<std::uint32_t> scratch_moves;

    for (std::size_t c = 0; c < configs; ++c) {
        auto cfg = space.config(c);
        for (Vertex r = 0; r < n; ++r) {
            if (std::binary_search(cfg.begin(), cfg.end(), r)) {
                for (std::size_t side : {kCopsToMove, kRobberToMove}) {
                    dtc[pack(c, n, r, side)] = 0;
                    queue.push_back(pack(c, n, r, side));
                }
            } else {
                pending[c * n + r] = static_cast<std::uint32_t>(g.degree(r) + 1);
            }
        }
    }

    // FIFO order visits states by non-decreasing dtc, so the first cop win
    // found is the fastest and the last robber reply resolved is the slowest.
    JointMoves moves(g, space);
    // Joint moves of a config are needed once per robber position; keep them
    // while memory allows.
    constexpr std::size_t kCacheEntries = std::size_t{1} << 25;
    std::vector<std::vector<std::uint32_t>> cache(configs);
    std::size_t cached = 0;
    auto joint_moves = [&](std::size_t c) -> std::span<const std::uint32_t> {
        auto& slot = cache[c];
        if (!slot.empty()) return slot;
        const auto& fresh = moves.of(space.config(c));
        if (cached + fresh.size() > kCacheEntries) {
            scratch_moves.assign(fresh.begin(), fresh.end());
            return scratch_moves;
        }
        slot.assign(fresh.begin(), fresh.end());
        cached += slot.size();
        return slot;
    };
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t s = queue[head];
        const std::size_t side = s & 1;
        const std::size_t cr = s >> 1;
        const std::size_t c = cr / n;
        const auto r = static_cast<Vertex>(cr % n);
        const std::uint16_t next = static_cast<std::uint16_t>(dtc[s] + 1);
        if (next == SolveResult::kRobberWin) throw std::overflow_error("capture distance overflow");

        if (side == kCopsToMove) {
            auto visit = [&](Vertex r2) {
                std::size_t idx = c * n + r2;
                std::size_t p = pack(c, n, r2, kRobberToMove);
                if (dtc[p] != SolveResult::kRobberWin) return;
                if (--pending[idx] == 0) {
                    dtc[p] = next;
                    queue.push_back(p);
                }
            };
            visit(r);
            for (Vertex r2 : g.neighbors(r)) visit(r2);
        } else {
            for (std::size_t c2 : joint_moves(c)) {
                std::size_t p = pack(c2, n, r, kCopsToMove);
                if (dtc[p] != SolveResult::kRobberWin) continue;
                dtc[p] = next;
                queue.push_back(p);
            }
        }
    }

    // Best placement: lexicographic scan keeps the least config on ties.
    std::uint32_t best_time = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t c = 0; c < configs; ++c) {
        auto cfg = space.config(c);
        std::uint32_t worst = 0;
        bool wins = true;
        for (Vertex r = 0; r < n && wins; ++r) {
            if (std::binary_search(cfg.begin(), cfg.end(), r)) continue;
            auto d = dtc[pack(c, n, r, kCopsToMove)];
            if (d == SolveResult::kRobberWin) wins = false;
            else worst = std::max<std::uint32_t>(worst, d);
        }
        if (wins && worst < best_time) {
            best_time = worst;
            res.best_ = CopConfig(cfg.begin(), cfg.end());
        }
    }
    if (res.best_) res.capture_time_ = best_time;
    return res;
}

std::size_t SolveResult::state_index(const GameState& s) const {
    const std::size_t n = graph_->order();
    if (s.cops.size() != space_->cops()) throw std::invalid_argument("wrong number of cops in state");
    if (!std::is_sorted(s.cops.begin(), s.cops.end()))
        throw std::invalid_argument("cop positions must be sorted");
    for (Vertex v : s.cops)
        if (v >= n) throw std::invalid_argument("cop position out of range");
    if (s.robber >= n) throw std::invalid_argument("robber position out of range");
    return pack(space_->index(s.cops), n, s.robber,
                s.to_move == Side::cops ? kCopsToMove : kRobberToMove);
}

Outcome SolveResult::outcome(const GameState& s) const {
    return dtc_[state_index(s)] == kRobberWin ? Outcome::robber_win : Outcome::cop_win;
}

std::optional<std::uint32_t> SolveResult::dtc(const GameState& s) const {
    auto d = dtc_[state_index(s)];
    if (d == kRobberWin) return std::nullopt;
    return d;
}

Vertex SolveResult::robber_placement(std::span<const Vertex> cops) const {
    const std::size_t n = graph_->order();
    const std::size_t c = space_->index(cops);
    std::optional<Vertex> best;
    std::uint32_t best_key = 0;
    for (Vertex r = 0; r < n; ++r) {
        if (std::binary_search(cops.begin(), cops.end(), r)) continue;
        // Robber-win sorts above every finite capture time.
        std::uint32_t key = dtc_[pack(c, n, r, kCopsToMove)];
        if (!best || key > best_key) {
            best = r;
            best_key = key;
        }
    }
    return best.value_or(cops.front());
}

std::vector<GameState> SolveResult::successors(const GameState& s) const {
    const Graph& g = *graph_;
    std::vector<GameState> out;
    if (s.to_move == Side::robber) {
        out.push_back({s.cops, s.robber, Side::cops});
        for (Vertex w : g.neighbors(s.robber)) out.push_back({s.cops, w, Side::cops});
    } else {
        JointMoves moves(g, *space_);
        for (std::size_t c : moves.of(s.cops)) {
            auto cfg = space_->config(c);
            out.push_back({CopConfig(cfg.begin(), cfg.end()), s.robber, Side::robber});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned cop_number(const Graph& g, unsigned k_max, const SolveOptions& options) {
    for (unsigned k = 1; k <= k_max; ++k)
        if (solve(g, k, options).cop_win()) return k;
    throw NotCopWin("no winning strategy with at most " + std::to_string(k_max) + " cops");
}

CopConfig best_initial_placement(const SolveResult& result) {
    if (!result.best_placement())
        throw NotCopWin(std::to_string(result.cops()) + " cops have no winning placement");
    return *result.best_placement();
}

GameState optimal_move(const SolveResult& result, const GameState& s) {
    if (s.captured()) throw std::invalid_argument("state is terminal: " + to_string(s));
    const bool cops_move = s.to_move == Side::cops;

    std::optional<GameState> best;
    std::uint32_t best_key = 0;
    for (auto& next : result.successors(s)) {
        std::uint32_t d = result.raw_dtc(result.state_index(next));
        // Larger key is preferred. Cops minimise dtc; the robber maximises it
        // with robber-win (0xFFFF) on top. A losing cop side sees only
        // robber-win successors, which all tie.
        std::uint32_t key = cops_move ? (0xFFFFu - d) : d;
        if (!best || key > best_key) {
            best = std::move(next);
            best_key = key;
        }
    }
    return *best;
}

std::uint32_t capture_time(const Graph& g, unsigned k, const SolveOptions& options) {
    auto res = solve(g, k, options);
    if (!res.capture_time())
        throw NotCopWin("graph is not " + std::to_string(k) + "-cop-win");
    return *res.capture_time();
}

bool is_legal_cop_move(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to) {
    if (from.size() != to.size()) return false;
    const std::size_t k = from.size();
    for (Vertex v : to)
        if (v >= g.order()) return false;
    // Bipartite matching old cop -> new position along closed neighbourhoods.
    std::vector<int> owner(k, -1);
    std::vector<bool> seen;
    auto reach = [&](Vertex a, Vertex b) { return a == b || g.has_edge(a, b); };
    std::function<bool(std::size_t)> augment = [&](std::size_t i) -> bool {
        for (std::size_t j = 0; j < k; ++j) {
            if (seen[j] || !reach(from[i], to[j])) continue;
            seen[j] = true;
            if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]))) {
                owner[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < k; ++i) {
        seen.assign(k, false);
        if (!augment(i)) return false;
    }
    return true;
}

// Strategies ---------------------------------------------------------------

CopConfig OptimalCops::place(const Graph&) {
    if (result_->best_placement()) return *result_->best_placement();
    auto cfg = result_->space().config(0);
    return CopConfig(cfg.begin(), cfg.end());
}

CopConfig OptimalCops::move(const Graph&, std::span<const GameState> history) {
    return optimal_move(*result_, history.back()).cops;
}

Vertex OptimalRobber::place(const Graph&, std::span<const Vertex> cops) {
    return result_->robber_placement(cops);
}

Vertex OptimalRobber::move(const Graph&, std::span<const GameState> history) {
    return optimal_move(*result_, history.back()).robber;
}

CopConfig RandomCops::place(const Graph& g) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.order() - 1));
    CopConfig c(k_);
    for (auto& v : c) v = pick(rng_);
    std::sort(c.begin(), c.end());
    return c;
}

CopConfig RandomCops::move(const Graph& g, std::span<const GameState> history) {
    CopConfig next = history.back().cops;
    for (auto& v : next) {
        auto nb = g.neighbors(v);
        std::uniform_int_distribution<std::size_t> pick(0, nb.size());
        std::size_t i = pick(rng_);
        if (i < nb.size()) v = nb[i];
    }
    std::sort(next.begin(), next.end());
    return next;
}

Vertex RandomRobber::place(const Graph& g, std::span<const Vertex> cops) {
    std::vector<Vertex> free;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!std::binary_search(cops.begin(), cops.end(), v)) free.push_back(v);
    if (free.empty()) return 0;
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    return free[pick(rng_)];
}

Vertex RandomRobber::move(const Graph& g, std::span<const GameState> history) {
    Vertex r = history.back().robber;
    auto nb = g.neighbors(r);
    std::uniform_int_distribution<std::size_t> pick(0, nb.size());
    std::size_t i = pick(rng_);
    return i < nb.size() ? nb[i] : r;
}

std::uint64_t default_round_cap(std::size_t n, unsigned k) {
    return saturating_mul(state_count(n, k), 2);
}

PlayRecord simulate(const Graph& g, CopStrategy& cops, RobberStrategy& robber,
                    std::uint64_t max_rounds) {
    const std::size_t n = g.order();
    const unsigned k = cops.cops();
    PlayRecord rec;

    CopConfig placed = cops.place(g);
    std::sort(placed.begin(), placed.end());
    GameState at{placed, 0, Side::cops};
    if (placed.size() != k) throw IllegalMove(at, "cop placement has wrong size");
    for (Vertex v : placed)
        if (v >= n) throw IllegalMove(at, "cop placed outside the graph");
    Vertex r = robber.place(g, placed);
    if (r >= n) throw IllegalMove(at, "robber placed outside the graph");
    rec.states.push_back({placed, r, Side::cops});
    if (rec.states.back().captured()) {
        rec.captured = true;
        return rec;
    }

    while (rec.rounds < max_rounds) {
        const GameState before = rec.states.back();
        CopConfig next = cops.move(g, rec.states);
        std::sort(next.begin(), next.end());
        if (!is_legal_cop_move(g, before.cops, next))
            throw IllegalMove(before, "illegal cop move by strategy '" + cops.name() + "'");
        ++rec.rounds;
        rec.states.push_back({next, before.robber, Side::robber});
        if (rec.states.back().captured()) {
            rec.captured = true;
            return rec;
        }

        const GameState mid = rec.states.back();
        Vertex r2 = robber.move(g, rec.states);
        if (r2 >= n || (r2 != mid.robber && !g.has_edge(mid.robber, r2)))
            throw IllegalMove(mid, "illegal robber move by strategy '" + robber.name() + "'");
        rec.states.push_back({mid.cops, r2, Side::cops});
        if (rec.states.back().captured()) {
            rec.captured = true;
            return rec;
        }
    }
    return rec;
}

}  // namespace copnum
