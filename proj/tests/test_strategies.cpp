#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "copnum/bounds.hpp"
#include "copnum/strategies.hpp"
#include "oracles.hpp"

using namespace copnum;

namespace {

// Two hubs joined by paths of length 2, 3 and 3.
Graph theta() {
    std::vector<Edge> e{{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 1}};
    return Graph(7, e);
}

PlayRecord play_optimal_robber(const Graph& g, CopStrategy& cops) {
    auto table = std::make_shared<const SolveResult>(solve(g, cops.cops()));
    OptimalRobber robber(table);
    return simulate(g, cops, robber, default_round_cap(g.order(), cops.cops()));
}

}  // namespace

TEST_CASE("path guard on the path itself captures") {
    Graph p6 = named::path(6);
    PathGuard guard(p6, {0, 1, 2, 3, 4, 5});
    auto play = play_optimal_robber(p6, guard);
    CHECK(play.captured);
    std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
    CHECK(verify_guard(p6, all, guard, 6).ok());
}

TEST_CASE("path guard rejects non-isometric paths") {
    CHECK_THROWS_AS(PathGuard(named::cycle(6), {0, 1, 2, 3, 4}), std::invalid_argument);
    CHECK_NOTHROW(PathGuard::unchecked(named::cycle(6), {0, 1, 2, 3, 4}));
}

TEST_CASE("path guard shadow is a retraction") {
    Graph g = named::petersen();
    auto path = isometric_path(g, 0, 7);
    PathGuard guard(g, path);
    std::vector<Vertex> f(g.order());
    for (Vertex v = 0; v < g.order(); ++v) f[v] = guard.shadow(v);
    CHECK(check_retraction(g, path, f));
}

TEST_CASE("geodesic on C6 is guarded") {
    Graph c6 = named::cycle(6);
    std::vector<Vertex> path{0, 1, 2, 3};
    PathGuard guard(c6, path);
    auto v = verify_guard(c6, path, guard, 6);
    CHECK(v.ok());
    CHECK(v.violation.empty());
}

TEST_CASE("corner-to-corner geodesic on the 4x4 grid is guarded") {
    Graph g = named::grid(4, 4);
    auto path = isometric_path(g, 0, 15);
    REQUIRE(path.size() == 7);
    PathGuard guard(g, path);
    CHECK(verify_guard(g, path, guard, 16).ok());
}

TEST_CASE("a closed neighbourhood is 1-guardable") {
    Graph k5 = named::complete(5);
    VertexGuard guard(k5, 2);
    std::vector<Vertex> all{0, 1, 2, 3, 4};
    CHECK(verify_guard(k5, all, guard, 0).ok());

    Graph pet = named::petersen();
    VertexGuard hub(pet, 0);
    std::vector<Vertex> ball{0};
    for (Vertex w : pet.neighbors(0)) ball.push_back(w);
    CHECK(verify_guard(pet, ball, hub, 10).ok());
}

TEST_CASE("non-isometric path on a theta graph is not guarded") {
    Graph g = theta();
    std::vector<Vertex> path{5, 0, 3, 4, 1};
    REQUIRE_FALSE(is_isometric_path(g, path));
    auto guard = PathGuard::unchecked(g, path);
    auto v = verify_guard(g, path, guard, 20);
    CHECK(v.status == GuardStatus::fails);
    REQUIRE(v.violation.size() >= 2);
    const GameState& entered = v.violation.back();
    CHECK(std::find(path.begin(), path.end(), entered.robber) != path.end());
    CHECK_FALSE(entered.captured());
}

TEST_CASE("short warm-ups are reported separately from failures") {
    Graph c6 = named::cycle(6);
    std::vector<Vertex> path{0, 1, 2, 3};
    PathGuard guard(c6, path);
    auto v = verify_guard(c6, path, guard, 0);
    if (!v.ok()) {
        CHECK(v.status == GuardStatus::warmup_insufficient);
        REQUIRE(v.sufficient_warmup);
        CHECK(verify_guard(c6, path, guard, *v.sufficient_warmup).ok());
    }
    Graph grid = named::grid(4, 4);
    auto gp = isometric_path(grid, 0, 15);
    PathGuard gguard(grid, gp);
    auto w = verify_guard(grid, gp, gguard, 0);
    CHECK(w.status == GuardStatus::warmup_insufficient);
    CHECK(w.sufficient_warmup == 4u);
    CHECK_FALSE(w.violation.empty());
    CHECK(verify_guard(grid, gp, gguard, 4).ok());
    CHECK_FALSE(verify_guard(grid, gp, gguard, 3).ok());
}

TEST_CASE("geodesics of Petersen are all guarded") {
    Graph g = named::petersen();
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = u; v < 10; ++v) {
            auto path = isometric_path(g, u, v);
            PathGuard guard(g, path);
            CHECK(verify_guard(g, path, guard, 10).ok());
        }
}

TEST_CASE("parallel-class strategy on C8 with two cops") {
    auto lg = truncated_affine_graph(2, 1);
    auto labels = class_labels(lg);
    REQUIRE(!labels.empty());
    ParallelClassStrategy strat(lg, labels.front());
    CHECK(strat.cops() == 2);
    CHECK(play_optimal_robber(lg.graph, strat).captured);
}

TEST_CASE("parallel-class strategy with q cops wins on A^-1, q = 3") {
    auto lg = truncated_affine_graph(3, 1);
    for (auto label : class_labels(lg)) {
        ParallelClassStrategy strat(lg, label);
        CHECK(strat.cops() == 3);
        auto place = strat.place(lg.graph);
        for (Vertex v : place) CHECK(lg.role[v] == Role::line);
        CHECK(play_optimal_robber(lg.graph, strat).captured);
    }
}

TEST_CASE("parallel-class strategy with q - 1 cops loses on A^-1, q = 3") {
    auto lg = truncated_affine_graph(3, 1);
    ParallelClassStrategy strat(lg, class_labels(lg).front(), 2u);
    CHECK_FALSE(play_optimal_robber(lg.graph, strat).captured);
}

TEST_CASE("parallel-class strategy with q = 4") {
    for (unsigned k : {1u, 2u}) {
        auto lg = truncated_affine_graph(4, k);
        ParallelClassStrategy strat(lg, class_labels(lg).front());
        // The optimal robber from a 4-cop table on 36 or 32 vertices.
        CHECK(play_optimal_robber(lg.graph, strat).captured);
    }
}

TEST_CASE("parallel-class strategy rejects deleted classes") {
    auto lg = truncated_affine_graph(3, 1);
    CHECK_THROWS_AS(ParallelClassStrategy(lg, 3), std::invalid_argument);
    CHECK_THROWS_AS(ParallelClassStrategy(lg, 0, 0u), std::invalid_argument);
    CHECK_THROWS_AS(ParallelClassStrategy(lg, 0, 4u), std::invalid_argument);
}

TEST_CASE("Frankl bound examples") {
    for (std::size_t n = 1; n <= 8; ++n) CHECK(frankl_upper_bound(named::complete(n)).bound == 1);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(frankl_upper_bound(named::path(n)).bound == 1);
    auto pet = frankl_upper_bound(named::petersen());
    CHECK(pet.bound >= 3);
}

TEST_CASE("Frankl decomposition partitions the graph into guardable pieces") {
    std::vector<Graph> corpus{named::petersen(), named::heawood(), named::grid(4, 4), named::cycle(9),
                              incidence_graph(projective_plane(3)).graph, truncated_affine_graph(3, 1).graph};
    for (const Graph& g : corpus) {
        auto fb = frankl_upper_bound(g);
        CHECK(fb.bound == fb.decomposition.pieces.size());
        std::vector<int> seen(g.order(), 0);
        std::vector<bool> removed(g.order(), false);
        for (const auto& piece : fb.decomposition.pieces) {
            for (Vertex v : piece.vertices) ++seen[v];
            std::vector<Vertex> residual;
            for (Vertex v = 0; v < g.order(); ++v)
                if (!removed[v]) residual.push_back(v);
            Graph r = induced_subgraph(g, residual);
            std::vector<Vertex> local;
            for (Vertex v : piece.vertices)
                local.push_back(static_cast<Vertex>(
                    std::lower_bound(residual.begin(), residual.end(), v) - residual.begin()));
            if (piece.kind == PieceKind::path) {
                // Isometric within the residual component containing it.
                auto comps = components(r);
                for (auto& comp : comps)
                    if (std::find(comp.begin(), comp.end(), local[0]) != comp.end()) {
                        Graph c = induced_subgraph(r, comp);
                        std::vector<Vertex> in_c;
                        for (Vertex v : local)
                            in_c.push_back(static_cast<Vertex>(
                                std::lower_bound(comp.begin(), comp.end(), v) - comp.begin()));
                        CHECK(is_isometric_path(c, in_c));
                    }
            } else {
                bool centred = false;
                for (Vertex c : local) {
                    bool all = true;
                    for (Vertex v : local) all = all && (v == c || r.has_edge(v, c));
                    centred = centred || all;
                }
                CHECK(centred);
            }
            for (Vertex v : piece.vertices) removed[v] = true;
        }
        for (int s : seen) CHECK(s == 1);
        CHECK(fb.bound >= cop_number(g, 4));
    }
}

TEST_CASE("mdc extraction") {
    auto star = extract_mdc(named::star(5));
    CHECK(star.vertices.size() == 6);
    CHECK(oracle::is_caterpillar(named::star(5), star.vertices, star.spine));

    auto path = extract_mdc(named::path(7));
    CHECK(path.vertices.size() == 7);

    Graph pet = named::petersen();
    auto cat = extract_mdc(pet);
    CHECK(cat.vertices.size() >= 4);
    CHECK(cat.log2_benchmark == 4);
    CHECK(oracle::is_caterpillar(pet, cat.vertices, cat.spine));
}

TEST_CASE("mdc extraction always yields an induced caterpillar") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) {
            auto cat = extract_mdc(g);
            CHECK(oracle::is_caterpillar(g, cat.vertices, cat.spine));
            CHECK(cat.log2_benchmark == static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))));
        }
    for (const Graph& g : {named::heawood(), named::grid(5, 5), incidence_graph(projective_plane(3)).graph}) {
        auto cat = extract_mdc(g);
        CHECK(oracle::is_caterpillar(g, cat.vertices, cat.spine));
    }
}
