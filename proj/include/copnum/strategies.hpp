#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copnum/game.hpp"
#include "copnum/geometry.hpp"
#include "copnum/graph.hpp"

namespace copnum {

/// One cop guarding an isometric path P = p_0 ... p_L.
///
/// The robber's shadow on P is p_i with i = min(d(p_0, robber), L). This map
/// is a retraction onto P, so once the cop stands on the shadow it can follow
/// it forever, and a robber stepping onto P lands on the cop's next square.
/// Until then the cop walks along P toward the shadow.
class PathGuard : public CopStrategy {
public:
    /// Throws std::invalid_argument unless `path` is isometric in g.
    PathGuard(const Graph& g, std::vector<Vertex> path);

    /// Same rule without the isometry check, for demonstrating failures.
    static PathGuard unchecked(const Graph& g, std::vector<Vertex> path);

    std::string name() const override { return "path-guard"; }
    unsigned cops() const override { return 1; }
    CopConfig place(const Graph& g) override;
    CopConfig move(const Graph& g, std::span<const GameState> history) override;
    bool positional() const override { return true; }

    const std::vector<Vertex>& path() const { return path_; }
    Vertex shadow(Vertex robber) const;
    /// True once the cop stands on the robber's shadow.
    bool guarding(const GameState& s) const;

private:
    struct NoCheck {};
    PathGuard(const Graph& g, std::vector<Vertex> path, NoCheck);

    std::vector<Vertex> path_;
    std::vector<std::size_t> from_start_;  // d(p_0, v)
    std::vector<std::size_t> index_on_path_;
};

/// One cop sitting on `home`, guarding its closed neighbourhood (and hence
/// any clique containing home).
class VertexGuard : public CopStrategy {
public:
    VertexGuard(const Graph& g, Vertex home);
    std::string name() const override { return "vertex-guard"; }
    unsigned cops() const override { return 1; }
    CopConfig place(const Graph&) override { return {home_}; }
    CopConfig move(const Graph& g, std::span<const GameState> history) override;
    bool positional() const override { return true; }

private:
    Vertex home_;
    std::vector<std::size_t> to_home_;
};

/// Cops on the lines of one surviving parallel class of a truncated affine
/// plane's incidence graph.
///
/// Every point lies on a line of the class, so a robber must sit on a line
/// L outside it. The cop on the class line through some point P of L steps
/// to P; the robber can then neither stay on L nor move to a point of L.
/// With fewer cops than lines in the class only the first lines are manned.
class ParallelClassStrategy : public CopStrategy {
public:
    ParallelClassStrategy(const LabeledGraph& lg, std::uint32_t class_label,
                          std::optional<unsigned> cops = std::nullopt);

    std::string name() const override { return "parallel-class"; }
    unsigned cops() const override { return static_cast<unsigned>(home_.size()); }
    CopConfig place(const Graph&) override { return home_; }
    CopConfig move(const Graph& g, std::span<const GameState> history) override;
    bool positional() const override { return true; }

private:
    std::vector<Role> role_;
    std::vector<bool> in_class_;
    std::vector<Vertex> class_line_of_point_;
    CopConfig home_;
};

/// Surviving parallel-class labels of a labelled incidence graph, ascending.
std::vector<std::uint32_t> class_labels(const LabeledGraph& lg);

enum class PieceKind : std::uint8_t { neighbourhood, path };

struct Piece {
    PieceKind kind;
    /// Original vertex ids; for paths in path order.
    std::vector<Vertex> vertices;
};

struct Decomposition {
    std::vector<Piece> pieces;
};

struct FranklBound {
    std::size_t bound = 0;
    Decomposition decomposition;
};

/// Greedy decomposition into closed neighbourhoods and isometric paths, each
/// 1-guardable in the residual graph where it was removed. The piece count
/// summed over all components bounds the cop number from above.
FranklBound frankl_upper_bound(const Graph& g);

struct Caterpillar {
    std::vector<Vertex> vertices;  // sorted
    std::vector<Vertex> spine;     // the dominating path, in order
    std::size_t log2_benchmark = 0;  // ceil(log2 n)
};

/// Induced caterpillar grown from a diametral isometric path: leaves are
/// added greedily when adjacent to exactly one spine vertex and to no other
/// chosen vertex.
Caterpillar extract_mdc(const Graph& g);

enum class GuardStatus : std::uint8_t { holds, warmup_insufficient, fails };

struct GuardVerdict {
    GuardStatus status = GuardStatus::holds;
    /// Smallest warm-up that would make the guard hold (when it can).
    std::optional<std::uint64_t> sufficient_warmup;
    /// Play ending with a robber move into the subset that is not punished.
    std::vector<GameState> violation;
    bool ok() const { return status == GuardStatus::holds; }
};

/// Explores every robber behaviour against a positional cop strategy and
/// checks that, from robber move `warmup + 1` on, any robber move into
/// `subset` is answered by capture on the next cop move.
GuardVerdict verify_guard(const Graph& g, std::span<const Vertex> subset, CopStrategy& strategy,
                          std::uint64_t warmup);

}  // namespace copnum
