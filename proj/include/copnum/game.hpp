#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

/// Sorted multiset of cop positions. Cops are interchangeable and may share a
/// vertex.
using CopConfig = std::vector<Vertex>;

enum class Side : std::uint8_t { cops, robber };

struct GameState {
    CopConfig cops;
    Vertex robber = 0;
    Side to_move = Side::cops;

    bool captured() const;
    friend auto operator<=>(const GameState&, const GameState&) = default;
    friend bool operator==(const GameState&, const GameState&) = default;
};

std::string to_string(const GameState& s);

enum class Outcome : std::uint8_t { cop_win, robber_win };

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t states, std::uint64_t budget);
    std::uint64_t states() const { return states_; }

private:
    std::uint64_t states_;
};

class NotCopWin : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IllegalMove : public std::runtime_error {
public:
    IllegalMove(const GameState& at, const std::string& what);
    const GameState& state() const { return state_; }

private:
    GameState state_;
};

inline constexpr std::uint64_t kDefaultStateBudget = 50'000'000;

struct SolveOptions {
    std::uint64_t state_budget = kDefaultStateBudget;
};

/// Number of game states C(n+k-1, k) * n * 2, saturating at UINT64_MAX.
std::uint64_t state_count(std::size_t n, unsigned k);

/// Ranks sorted cop multisets over n vertices in lexicographic order.
class ConfigSpace {
public:
    ConfigSpace(std::size_t n, unsigned k);

    std::size_t size() const { return count_; }
    unsigned cops() const { return k_; }
    std::size_t vertices() const { return n_; }

    /// Lexicographic index of a sorted multiset.
    std::size_t index(std::span<const Vertex> sorted) const;
    std::span<const Vertex> config(std::size_t index) const {
        return {flat_.data() + index * k_, k_};
    }

private:
    std::size_t n_;
    unsigned k_;
    std::size_t count_;
    std::vector<Vertex> flat_;
    std::vector<std::vector<std::size_t>> binom_;
    std::vector<std::uint32_t> lex_of_colex_;
};

/// Fully classified k-cop game on one graph.
///
/// Every state (cops, robber, side to move) is labelled cop-win or
/// robber-win together with its distance to capture in plies. Cop-to-move
/// values take the minimum over successors and robber-to-move values the
/// maximum, so the table describes optimal play for both sides.
class SolveResult {
public:
    static constexpr std::uint16_t kRobberWin = 0xFFFF;

    const Graph& graph() const { return *graph_; }
    unsigned cops() const { return space_->cops(); }
    std::uint64_t state_count() const { return dtc_.size(); }

    Outcome outcome(const GameState& s) const;
    /// Plies to capture under optimal play; empty for robber-win states.
    std::optional<std::uint32_t> dtc(const GameState& s) const;

    /// True iff some placement wins against every robber placement.
    bool cop_win() const { return best_.has_value(); }
    const std::optional<CopConfig>& best_placement() const { return best_; }
    /// Worst-case plies to capture from the best placement.
    std::optional<std::uint32_t> capture_time() const { return capture_time_; }

    /// Robber reply to a placement: a robber-win vertex if one exists, else
    /// the vertex with the longest capture time; smallest index on ties.
    Vertex robber_placement(std::span<const Vertex> cops) const;

    /// All successors of s for the side to move, sorted.
    std::vector<GameState> successors(const GameState& s) const;

    std::uint16_t raw_dtc(std::size_t state_index) const { return dtc_[state_index]; }
    std::size_t state_index(const GameState& s) const;
    const ConfigSpace& space() const { return *space_; }

private:
    friend SolveResult solve(const Graph&, unsigned, const SolveOptions&);
    SolveResult() = default;

    std::shared_ptr<const Graph> graph_;
    std::shared_ptr<const ConfigSpace> space_;
    std::vector<std::uint16_t> dtc_;
    std::optional<CopConfig> best_;
    std::optional<std::uint32_t> capture_time_;
};

/// Retrograde analysis of the k-cop game. Throws BudgetExceeded when the
/// state count exceeds options.state_budget and std::invalid_argument on a
/// disconnected graph or k == 0.
SolveResult solve(const Graph& g, unsigned k, const SolveOptions& options = {});

/// Least k <= k_max that wins. Throws NotCopWin when k_max cops do not.
unsigned cop_number(const Graph& g, unsigned k_max, const SolveOptions& options = {});

/// Placement that wins against every robber reply: minimal worst-case
/// capture time, then lexicographically least. Throws NotCopWin.
CopConfig best_initial_placement(const SolveResult& result);

/// Optimal reply for the side to move. Winning side: keep the win with the
/// fastest (cops) or slowest (robber) capture. Losing side: resist as long
/// as possible. Ties go to the lexicographically least successor.
GameState optimal_move(const SolveResult& result, const GameState& s);

/// Worst-case plies to capture from the best k-cop placement.
std::uint32_t capture_time(const Graph& g, unsigned k, const SolveOptions& options = {});

/// True iff `to` is reachable from `from` in one joint cop move (each cop
/// stays or steps to a neighbour).
bool is_legal_cop_move(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to);

// Strategies ---------------------------------------------------------------

class CopStrategy {
public:
    virtual ~CopStrategy() = default;
    virtual std::string name() const = 0;
    virtual unsigned cops() const = 0;
    virtual CopConfig place(const Graph& g) = 0;
    /// `history` ends with the current cops-to-move state.
    virtual CopConfig move(const Graph& g, std::span<const GameState> history) = 0;
    /// Positional strategies read only history.back(); verify_guard needs this.
    virtual bool positional() const { return false; }
};

class RobberStrategy {
public:
    virtual ~RobberStrategy() = default;
    virtual std::string name() const = 0;
    virtual Vertex place(const Graph& g, std::span<const Vertex> cops) = 0;
    /// `history` ends with the current robber-to-move state.
    virtual Vertex move(const Graph& g, std::span<const GameState> history) = 0;
};

/// Cops playing the solved table.
class OptimalCops : public CopStrategy {
public:
    explicit OptimalCops(std::shared_ptr<const SolveResult> result) : result_(std::move(result)) {}
    std::string name() const override { return "optimal"; }
    unsigned cops() const override { return result_->cops(); }
    CopConfig place(const Graph& g) override;
    CopConfig move(const Graph& g, std::span<const GameState> history) override;
    bool positional() const override { return true; }

private:
    std::shared_ptr<const SolveResult> result_;
};

/// Robber playing the solved table.
class OptimalRobber : public RobberStrategy {
public:
    explicit OptimalRobber(std::shared_ptr<const SolveResult> result) : result_(std::move(result)) {}
    std::string name() const override { return "optimal"; }
    Vertex place(const Graph& g, std::span<const Vertex> cops) override;
    Vertex move(const Graph& g, std::span<const GameState> history) override;

private:
    std::shared_ptr<const SolveResult> result_;
};

class RandomCops : public CopStrategy {
public:
    RandomCops(unsigned k, std::uint64_t seed) : k_(k), rng_(seed) {}
    std::string name() const override { return "random"; }
    unsigned cops() const override { return k_; }
    CopConfig place(const Graph& g) override;
    CopConfig move(const Graph& g, std::span<const GameState> history) override;

private:
    unsigned k_;
    std::mt19937_64 rng_;
};

class RandomRobber : public RobberStrategy {
public:
    explicit RandomRobber(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "random"; }
    Vertex place(const Graph& g, std::span<const Vertex> cops) override;
    Vertex move(const Graph& g, std::span<const GameState> history) override;

private:
    std::mt19937_64 rng_;
};

struct PlayRecord {
    /// From the first cops-to-move state (after both placements) onward.
    std::vector<GameState> states;
    bool captured = false;
    /// Completed cop moves.
    std::uint64_t rounds = 0;
};

/// Default round cap: twice the state count of the k-cop game.
std::uint64_t default_round_cap(std::size_t n, unsigned k);

/// Plays cops against robber. Throws IllegalMove when a strategy leaves the
/// rules; the exception carries the state at which it happened.
PlayRecord simulate(const Graph& g, CopStrategy& cops, RobberStrategy& robber,
                    std::uint64_t max_rounds);

}  // namespace copnum
