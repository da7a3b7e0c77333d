#include <doctest.h>

#include <vector>

#include "domgame/corpus.hpp"
#include "domgame/errors.hpp"
#include "domgame/game_state.hpp"
#include "domgame/impartial.hpp"
#include "oracles.hpp"

using namespace domgame;

namespace {

std::vector<Nimber> nimbers(std::initializer_list<unsigned> v)
{
    std::vector<Nimber> out;
    for (unsigned x : v)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("mex and nim sum")
{
    CHECK(mex(nimbers({})).value == 0);
    CHECK(mex(nimbers({0, 1, 3})).value == 2);
    CHECK(mex(nimbers({1, 2})).value == 0);
    CHECK(mex(nimbers({2, 0, 1, 1})).value == 3);
    CHECK(nim_sum(nimbers({1, 2, 3, 3, 3})).value == 0);
    CHECK(nim_sum(nimbers({2, 1, 3})).value == 0);
    CHECK(nim_sum(nimbers({})).value == 0);
}

TEST_CASE("small graphs")
{
    CHECK(grundy(GameState::initial(build_path(1))).value == 1);
    CHECK(grundy(GameState::initial(build_path(3))).value == 2);
    CHECK(grundy(GameState::initial(build_complete(5))).value == 1);
    CHECK(grundy(GameState::initial(Graph(0, std::vector<Edge>{}))).value == 0);
    // K1 + K1: two independent single moves.
    CHECK(grundy(GameState::initial(Graph(2, std::vector<Edge>{}))).value == 0);
    CHECK(normal_winner(GameState::initial(build_path(4))) == Winner::Second);
}

TEST_CASE("size guard")
{
    CHECK_THROWS_AS(grundy(GameState::initial(build_path(29))), SizeGuardError);
    CHECK(grundy(GameState::initial(build_path(29)), 30).value == 1);
    CHECK_THROWS_AS(grundy(GameState::initial(colored_path("AB"))), UsageError);
}

TEST_CASE("best move")
{
    auto s = GameState::initial(build_path(3));
    const auto v = best_move_normal(s);
    REQUIRE(v);
    CHECK(grundy(apply_move(s, *v)).value == 0);
    CHECK_FALSE(best_move_normal(GameState::initial(build_path(4))));
    ImpartialSolver solver(std::make_shared<const Graph>(build_path(2)));
    CHECK_THROWS_AS(solver.best_move(0b11), UsageError);
}

TEST_CASE("grundy agrees with the mex definition on random graphs")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = 3 + static_cast<int>(seed % 10);
        const Graph g = corpus::random_graph(n, 0.15 + 0.05 * static_cast<double>(seed % 8), seed);
        CAPTURE(graph_to_string(g));
        oracle::NaiveGrundy naive(g);
        CHECK(grundy(GameState::initial(g)).value == naive.value(0));
    }
}

TEST_CASE("decomposition and table settings give the same nimbers")
{
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);
        const auto g = std::make_shared<const Graph>(corpus::random_graph(n, 0.2, seed));
        CAPTURE(graph_to_string(*g));
        ImpartialSolver both(g);
        ImpartialSolver no_split(g, {.decompose = false});
        ImpartialSolver no_table(g, {.use_table = false});
        ImpartialSolver bare(g, {.use_table = false, .decompose = false});
        // Probe a few reachable positions, not only the start.
        VertexMask dominated = 0;
        for (Vertex v = 0; v < n; v += 3) {
            const Nimber expected = both.grundy(dominated);
            CHECK(no_split.grundy(dominated) == expected);
            CHECK(no_table.grundy(dominated) == expected);
            CHECK(bare.grundy(dominated) == expected);
            dominated |= g->closed_mask(v);
        }
        CHECK(no_table.table_size() == 0);
    }
}

TEST_CASE("winner matches plain minimax on all connected graphs up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : corpus::connected_graphs(n)) {
            const bool first = normal_winner(GameState::initial(g)) == Winner::First;
            CHECK(first == oracle::normal_first_wins(g));
        }
}
