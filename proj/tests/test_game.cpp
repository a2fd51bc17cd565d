#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "copnum/bounds.hpp"
#include "copnum/game.hpp"
#include "oracles.hpp"

using namespace copnum;

namespace {

std::vector<CopConfig> sorted_configs(std::size_t n, unsigned k) {
    std::vector<CopConfig> out;
    CopConfig cur(k, 0);
    while (true) {
        out.push_back(cur);
        int p = static_cast<int>(k) - 1;
        while (p >= 0 && cur[p] == n - 1) --p;
        if (p < 0) return out;
        ++cur[p];
        for (unsigned i = p + 1; i < k; ++i) cur[i] = cur[p];
    }
}

void check_against_oracle(const Graph& g, unsigned k) {
    auto res = solve(g, k);
    oracle::Minimax mm(g, k);
    for (const auto& cfg : sorted_configs(g.order(), k))
        for (Vertex r = 0; r < g.order(); ++r)
            for (bool cops_move : {true, false}) {
                GameState s{cfg, r, cops_move ? Side::cops : Side::robber};
                auto expect = mm.value(cfg, r, cops_move);
                auto got = res.dtc(s);
                REQUIRE(got.has_value() == expect.has_value());
                if (got) CHECK(*got == *expect);
            }
    CHECK(res.cop_win() == mm.cop_win());
    if (res.cop_win()) CHECK(*res.capture_time() == *mm.capture_time());
}

class Teleport : public CopStrategy {
public:
    std::string name() const override { return "teleport"; }
    unsigned cops() const override { return 1; }
    CopConfig place(const Graph&) override { return {0}; }
    CopConfig move(const Graph& g, std::span<const GameState>) override {
        return {static_cast<Vertex>(g.order() - 1)};
    }
};

}  // namespace

TEST_CASE("trees are cop-win") {
    auto res = solve(named::path(3), 1);
    CHECK(res.cop_win());
    for (Vertex c = 0; c < 3; ++c)
        for (Vertex r = 0; r < 3; ++r) {
            CHECK(res.outcome({{c}, r, Side::cops}) == Outcome::cop_win);
            CHECK(res.outcome({{c}, r, Side::robber}) == Outcome::cop_win);
        }
    CHECK(cop_number(named::star(6), 3) == 1);
    CHECK(cop_number(named::grid(1, 7), 3) == 1);
}

TEST_CASE("C4 needs two cops") {
    auto one = solve(named::cycle(4), 1);
    CHECK_FALSE(one.cop_win());
    for (Vertex c = 0; c < 4; ++c) {
        Vertex r = one.robber_placement(std::vector<Vertex>{c});
        CHECK(one.outcome({{c}, r, Side::cops}) == Outcome::robber_win);
    }
    CHECK(solve(named::cycle(4), 2).cop_win());
}

TEST_CASE("Petersen needs three cops") {
    CHECK_FALSE(solve(named::petersen(), 2).cop_win());
    CHECK(solve(named::petersen(), 3).cop_win());
}

TEST_CASE("terminal states have distance zero") {
    auto res = solve(named::cycle(5), 2);
    CHECK(res.dtc({{1, 3}, 3, Side::cops}) == 0u);
    CHECK(res.dtc({{1, 3}, 1, Side::robber}) == 0u);
}

TEST_CASE("retrograde table equals the minimax oracle on small graphs") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n))
            for (unsigned k = 1; k <= 2; ++k) check_against_oracle(g, k);
    check_against_oracle(named::cycle(8), 2);
    check_against_oracle(named::path(5), 1);
}

TEST_CASE("cop numbers of small graphs") {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const Graph& g : connected_graphs(n)) CHECK(cop_number(g, 3) == 1);
    CHECK(cop_number(named::cycle(4), 3) == 2);
    CHECK(cop_number(named::heawood(), 4) == 3);
    for (std::size_t n = 1; n <= 7; ++n) CHECK(cop_number(named::complete(n), 2) == 1);
    for (std::size_t n = 4; n <= 9; ++n) CHECK(cop_number(named::cycle(n), 3) == 2);
    CHECK_THROWS_AS(cop_number(named::petersen(), 2), NotCopWin);
}

TEST_CASE("solve rejects bad input") {
    std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(solve(Graph(4, split), 1), std::invalid_argument);
    CHECK_THROWS_AS(solve(named::path(3), 0), std::invalid_argument);
    SolveOptions tiny{100};
    try {
        solve(named::petersen(), 2, tiny);
        FAIL("expected budget error");
    } catch (const BudgetExceeded& e) {
        CHECK(e.states() == state_count(10, 2));
        CHECK(e.states() == 1100);
    }
}

TEST_CASE("best initial placement") {
    CHECK(best_initial_placement(solve(named::path(3), 1)) == CopConfig{1});

    // Least worst-case capture time, then lexicographic.
    Graph c4 = named::cycle(4);
    oracle::Minimax mm(c4, 2);
    std::optional<CopConfig> expect;
    std::size_t best = oracle::kInf;
    for (const auto& cfg : sorted_configs(4, 2)) {
        std::size_t worst = 0;
        for (Vertex r = 0; r < 4; ++r) worst = std::max(worst, mm.value(cfg, r, true).value_or(oracle::kInf));
        if (worst < best) {
            best = worst;
            expect = cfg;
        }
    }
    auto res = solve(c4, 2);
    CHECK(best_initial_placement(res) == *expect);
    CHECK(*res.capture_time() == best);

    Graph h = named::heawood();
    auto hres = solve(h, 3);
    auto place = best_initial_placement(hres);
    std::uint32_t worst = 0;
    for (Vertex r = 0; r < 14; ++r) worst = std::max(worst, *hres.dtc({place, r, Side::cops}));
    CHECK(worst == *hres.capture_time());
    CHECK_THROWS_AS(best_initial_placement(solve(c4, 1)), NotCopWin);
}

TEST_CASE("optimal moves") {
    auto p3 = solve(named::path(3), 1);
    auto cap = optimal_move(p3, {{0}, 1, Side::cops});
    CHECK(cap.captured());
    CHECK(p3.dtc(cap) == 0u);

    Graph c4 = named::cycle(4);
    auto one = solve(c4, 1);
    for (Vertex c = 0; c < 4; ++c) {
        Vertex opposite = (c + 2) % 4;
        auto next = optimal_move(one, {{c}, opposite, Side::robber});
        CHECK(next.robber == opposite);
    }

    auto pet = solve(named::petersen(), 3);
    auto place = *pet.best_placement();
    for (Vertex r = 0; r < 10; ++r) {
        GameState s{place, r, Side::cops};
        if (s.captured()) continue;
        auto next = optimal_move(pet, s);
        CHECK(*pet.dtc(next) + 1 == *pet.dtc(s));
    }
    CHECK_THROWS(optimal_move(pet, {{0, 1, 2}, 1, Side::cops}));
}

TEST_CASE("capture times") {
    CHECK(capture_time(named::path(2), 1) <= 2);
    oracle::Minimax p5(named::path(5), 1);
    CHECK(capture_time(named::path(5), 1) == *p5.capture_time());
    oracle::Minimax c8(named::cycle(8), 2);
    CHECK(capture_time(named::cycle(8), 2) == *c8.capture_time());
    CHECK_THROWS_AS(capture_time(named::cycle(8), 1), NotCopWin);
}

TEST_CASE("simulated plays") {
    auto p3 = std::make_shared<const SolveResult>(solve(named::path(3), 1));
    OptimalCops cops(p3);
    OptimalRobber robber(p3);
    auto play = simulate(named::path(3), cops, robber, 100);
    CHECK(play.captured);
    CHECK(play.rounds <= 2);

    auto c4 = std::make_shared<const SolveResult>(solve(named::cycle(4), 1));
    OptimalCops c4cops(c4);
    OptimalRobber c4robber(c4);
    auto cap = default_round_cap(4, 1);
    auto survive = simulate(named::cycle(4), c4cops, c4robber, cap);
    CHECK_FALSE(survive.captured);
    CHECK(survive.rounds == cap);
    for (std::size_t i = 1; i < survive.states.size(); ++i)
        CHECK(survive.states[i].to_move != survive.states[i - 1].to_move);

    auto h = std::make_shared<const SolveResult>(solve(named::heawood(), 3));
    OptimalCops hcops(h);
    OptimalRobber hrobber(h);
    auto hplay = simulate(named::heawood(), hcops, hrobber, 1000);
    CHECK(hplay.captured);
    CHECK(2 * hplay.rounds <= *h->capture_time() + 1);
}

TEST_CASE("random play is reproducible and legal") {
    Graph g = named::grid(3, 3);
    auto run = [&] {
        RandomCops cops(2, 11);
        RandomRobber robber(12);
        return simulate(g, cops, robber, 200).states;
    };
    auto a = run();
    CHECK(a == run());
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i].to_move == Side::robber) CHECK(is_legal_cop_move(g, a[i - 1].cops, a[i].cops));
}

TEST_CASE("illegal strategy moves are reported with the state") {
    auto res = std::make_shared<const SolveResult>(solve(named::path(6), 1));
    Teleport cops;
    OptimalRobber robber(res);
    try {
        simulate(named::path(6), cops, robber, 10);
        FAIL("expected an illegal move");
    } catch (const IllegalMove& e) {
        CHECK(e.state().cops == CopConfig{0});
        CHECK(e.state().to_move == Side::cops);
    }
}

TEST_CASE("joint cop move legality") {
    Graph p3 = named::path(3);
    CHECK(is_legal_cop_move(p3, std::vector<Vertex>{0, 2}, std::vector<Vertex>{1, 1}));
    CHECK(is_legal_cop_move(p3, std::vector<Vertex>{0, 0}, std::vector<Vertex>{0, 1}));
    CHECK_FALSE(is_legal_cop_move(p3, std::vector<Vertex>{0, 0}, std::vector<Vertex>{1, 2}));
    CHECK_FALSE(is_legal_cop_move(p3, std::vector<Vertex>{0}, std::vector<Vertex>{2}));
}

TEST_CASE("monotone in the number of cops") {
    for (std::size_t n = 4; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (unsigned k = 1; k <= 2; ++k)
                if (solve(g, k).cop_win()) CHECK(solve(g, k + 1).cop_win());
}

TEST_CASE("domination bounds the cop number; girth five implies c >= min degree") {
    std::vector<Graph> corpus{named::petersen(), named::heawood(), named::grid(3, 3), named::cycle(7),
                              named::star(4), named::complete(5), attach_pendant_path(named::cycle(5), 3)};
    for (const Graph& g : corpus) {
        unsigned c = cop_number(g, 4);
        CHECK(c <= domination_number(g));
        auto m = metrics(g);
        if (m.girth >= 5) CHECK(c >= m.min_degree);
    }
}

TEST_CASE("solve is deterministic") {
    Graph g = named::grid(3, 3);
    auto a = solve(g, 2), b = solve(g, 2);
    REQUIRE(a.state_count() == b.state_count());
    for (std::size_t i = 0; i < a.state_count(); ++i) REQUIRE(a.raw_dtc(i) == b.raw_dtc(i));
    CHECK(a.best_placement() == b.best_placement());
}

TEST_CASE("state counts") {
    CHECK(state_count(3, 1) == 18);
    CHECK(state_count(26, 4) == 1235052);
    ConfigSpace space(5, 3);
    auto all = sorted_configs(5, 3);
    REQUIRE(space.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(space.index(all[i]) == i);
}
