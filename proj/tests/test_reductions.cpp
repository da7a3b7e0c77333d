#include <doctest.h>

#include <map>

#include "domgame/corpus.hpp"
#include "domgame/errors.hpp"
#include "domgame/reductions.hpp"
#include "oracles.hpp"

using namespace domgame;

namespace {

/// Avoidance game by direct search over sets of true variables.
bool avoid_first_wins(const DnfFormula& f)
{
    std::map<std::vector<bool>, bool> memo;
    auto satisfied = [&](const std::vector<bool>& t) {
        for (const auto& c : f.conjunctions()) {
            bool all = true;
            for (int v : c)
                all = all && t[v];
            if (all)
                return true;
        }
        return false;
    };
    auto wins = [&](auto&& self, std::vector<bool> t) -> bool {
        if (auto it = memo.find(t); it != memo.end())
            return it->second;
        bool win = false;
        for (int v = 0; v < f.variable_count() && !win; ++v) {
            if (t[v])
                continue;
            t[v] = true;
            if (!satisfied(t) && !self(self, t))
                win = true;
            t[v] = false;
        }
        memo[t] = win;
        return win;
    };
    return wins(wins, std::vector<bool>(f.variable_count(), false));
}

std::string figure1_path() { return std::string(DOMGAME_FIXTURES) + "/figure1.dnf"; }

} // namespace

TEST_CASE("formula validation and text")
{
    const DnfFormula f(3, {{2, 0}, {1}});
    CHECK(f.conjunctions() == std::vector<std::vector<int>>{{0, 2}, {1}});
    CHECK(to_string(f) == "(x0 & x2) | (x1)");
    CHECK(f.occurrences() == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(DnfFormula(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(DnfFormula(2, {{0, 2}}), InputError);
    CHECK_THROWS_AS(DnfFormula(3, {{0, 1, 2}}), InputError);
    CHECK_THROWS_AS(DnfFormula(3, {{}}), InputError);
    CHECK(parse_dnf(dnf_to_text(f)) == f);
    CHECK(parse_dnf("# c\n0 1\n\n2\n") == DnfFormula(3, {{0, 1}, {2}}));
    CHECK_THROWS_AS(parse_dnf("0 1 2\n"), InputError);
    CHECK_THROWS_AS(parse_dnf("a\n"), InputError);
    CHECK(load_dnf_file(figure1_path()) == corpus::four_clause_example());
}

TEST_CASE("formula properties")
{
    const auto p = formula_properties(corpus::four_clause_example());
    CHECK(p.every_variable_used);
    CHECK(p.no_variable_in_all);
    CHECK(p.odd_occurrences);
    CHECK_FALSE(formula_properties(DnfFormula(3, {{0, 1}})).every_variable_used);
    CHECK_FALSE(formula_properties(DnfFormula(2, {{0, 1}, {0}})).no_variable_in_all);
    CHECK_FALSE(formula_properties(DnfFormula(3, {{0, 1}, {1, 2}})).odd_occurrences);
}

TEST_CASE("normalization keeps the avoidance winner")
{
    std::vector<DnfFormula> cases{
        DnfFormula(1, {{0}}),
        DnfFormula(2, {{0, 1}}),
        DnfFormula(3, {{0, 1}, {1, 2}}),
        DnfFormula(4, {{0, 1}}),
        DnfFormula(3, {{0}, {0, 1}, {0, 2}}),
        DnfFormula(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}),
        corpus::four_clause_example(),
    };
    for (const auto& f : cases) {
        CAPTURE(to_string(f));
        const auto g = normalize_formula(f);
        CHECK(formula_properties(g).all());
        CHECK(avoid_first_wins(g) == avoid_first_wins(f));
        CHECK((avoid_posdnf_winner(f) == Winner::First) == avoid_first_wins(f));
        CHECK(normalize_formula(g) == g);
    }
}

TEST_CASE("normal reduction structure")
{
    const auto f = corpus::four_clause_example();
    const auto r = build_normal_reduction(f);
    CHECK(r.graph.vertex_count() == 8 + 8);
    CHECK(diameter(r.graph) == 2);
    REQUIRE(r.q_sets.size() == 4);
    REQUIRE(r.v_cliques.size() == 6);
    CHECK(r.v_cliques[3].size() == 3);
    for (const auto& clique : r.v_cliques)
        for (Vertex a : clique)
            for (Vertex b : clique)
                CHECK((a == b || r.graph.adjacent(a, b)));
    CHECK(r.role_comments().size() == 1 + 16);
    CHECK_THROWS_AS(build_normal_reduction(DnfFormula(3, {{0, 1}, {1, 2}})), InputError);
    CHECK_THROWS_AS(build_normal_reduction(DnfFormula(2, {{0}, {1}})), InputError);
}

TEST_CASE("normal reduction preserves the winner")
{
    const auto figure = verify_normal_reduction(corpus::four_clause_example());
    CHECK(figure.passed());
    CHECK(figure.reduced_diameter == 2);
    for (const auto& f : corpus::random_normalized_formulas(25, 5, 5, 99)) {
        CAPTURE(to_string(f));
        const auto r = build_normal_reduction(f);
        CHECK(diameter(r.graph) == 2);
        CHECK(oracle::normal_first_wins(r.graph) == avoid_first_wins(f));
        const auto rep = verify_normal_reduction(f);
        CHECK(rep.passed());
    }
}

TEST_CASE("misere lift")
{
    const Graph h = build_path(3);
    const Graph g = build_misere_reduction(h);
    CHECK(g.vertex_count() == 9);
    CHECK(diameter(g) == 4);
    CHECK(misere_role_comments(h).size() == 1 + 6);
    for (int n = 1; n <= 5; ++n)
        for (const auto& hh : corpus::connected_graphs(n)) {
            const Graph lift = build_misere_reduction(hh);
            CHECK(diameter(lift) == 4);
            CHECK(oracle::misere_first_wins(lift) == oracle::normal_first_wins(hh));
        }
    const auto rep = verify_misere_reduction(build_path(4));
    CHECK(rep.passed());
    CHECK(rep.source_winner == "Second");
}

TEST_CASE("partizan lift")
{
    const Graph h = build_cycle(4);
    const Graph g = build_partizan_reduction(h);
    CHECK(g.vertex_count() == 8);
    CHECK(colors_to_string(*g.colors()) == "AAAABBBB");
    CHECK(g.closed_neighborhood(1) == g.closed_neighborhood(5));
    CHECK(diameter(g) == diameter(h));
    CHECK(partizan_role_comments(h).size() == 2);
    CHECK_THROWS_AS(build_partizan_reduction(Graph(2, std::vector<Edge>{})), InputError);

    for (int n = 2; n <= 4; ++n)
        for (const auto& hh : corpus::connected_graphs(n)) {
            const Graph lift = build_partizan_reduction(hh);
            const bool first = oracle::normal_first_wins(hh);
            auto [alice, bob] = oracle::PartizanMinimax(lift, false).first_wins();
            CHECK(alice == first);
            CHECK(bob == first);
            auto [malice, mbob] = oracle::PartizanMinimax(lift, true).first_wins();
            CHECK(malice == oracle::misere_first_wins(hh));
            CHECK(mbob == oracle::misere_first_wins(hh));
        }
    const auto rep = verify_partizan_reduction(build_cycle(7), Convention::normal);
    CHECK(rep.passed());
    CHECK(rep.source_winner == "First");
    CHECK(rep.reduced_winner == "First");
    CHECK(verify_partizan_reduction(build_path(3), Convention::misere).passed());
}
