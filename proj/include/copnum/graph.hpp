#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace copnum {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Loops are not stored. The game engine grants every player a "stay" move,
/// which is all that reflexivity means for the pursuit game.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range endpoints
    /// throw std::invalid_argument.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

inline constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

struct GraphMetrics {
    std::size_t diameter = 0;  // kInfinite when disconnected
    std::size_t girth = kInfinite;  // kInfinite for forests
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    bool is_connected = true;
    bool is_bipartite = true;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses the edge-list format: '#' comment lines, a header "n m", then m
/// lines "u v" with u < v. Duplicate edges and self-loops are rejected.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

inline constexpr std::size_t kUnreachable = kInfinite;

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Row-major n*n matrix of BFS distances (kUnreachable across components).
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);
    std::size_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
    std::size_t order() const { return n_; }

private:
    std::size_t n_;
    std::vector<std::size_t> d_;
};

GraphMetrics metrics(const Graph& g);
std::size_t girth(const Graph& g);
bool is_connected(const Graph& g);

/// Shortest u-v path. Among shortest paths the one that always steps to the
/// smallest admissible neighbor is returned. Throws when u, v are in
/// different components.
std::vector<Vertex> isometric_path(const Graph& g, Vertex u, Vertex v);

/// True iff `path` is a path in g (distinct, consecutive vertices adjacent)
/// whose internal distances equal the distances in g.
bool is_isometric_path(const Graph& g, std::span<const Vertex> path);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Checks that `f` is a retraction of g onto the vertex set `h`: identity on
/// h and a homomorphism of the reflexive graph. Throws std::invalid_argument
/// when f is not total or maps outside h.
bool check_retraction(const Graph& g, std::span<const Vertex> h, std::span<const Vertex> f);

/// Hangs a path of `extra` new vertices from vertex 0.
Graph attach_pendant_path(const Graph& g, std::size_t extra);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Size of a smallest dominating set, by exhaustive search.
std::size_t domination_number(const Graph& g);

/// Finds a vertex bijection a -> b preserving adjacency, if one exists.
/// Backtracking search with degree pruning; meant for small graphs.
std::vector<Vertex> find_isomorphism(const Graph& a, const Graph& b);
bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map);

namespace named {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t leaves);
Graph grid(std::size_t rows, std::size_t cols);
Graph petersen();
/// Heawood graph from its LCF description [5,-5]^7.
Graph heawood();

}  // namespace named

}  // namespace copnum
