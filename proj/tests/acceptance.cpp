// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "domgame/closed_forms.hpp"
#include "domgame/corpus.hpp"
#include "domgame/game_state.hpp"
#include "domgame/impartial.hpp"
#include "domgame/misere.hpp"
#include "domgame/partizan.hpp"
#include "domgame/reductions.hpp"

using namespace domgame;

namespace {

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::ostream&)> check;
};

std::string coloring(int n, std::uint32_t code)
{
    std::string s(n, 'A');
    for (int v = 0; v < n; ++v)
        if ((code >> v) & 1)
            s[v] = 'B';
    return s;
}

bool path_nimbers(std::ostream& note)
{
    for (int n = 1; n <= 24; ++n)
        if (grundy(GameState::initial(build_path(n))) != path_nimber(n)) {
            note << "P" << n;
            return false;
        }
    return path_nimber(1).value == 1 && path_nimber(2).value == 1 && path_nimber(3).value == 2;
}

bool marked_paths(std::ostream& note)
{
    for (int n = 1; n <= 16; ++n)
        for (PathMark k : {PathMark::prime, PathMark::doubleprime})
            if (grundy(marked_path(k, n)).value != static_cast<unsigned>(n % 4)) {
                note << "n=" << n;
                return false;
            }
    return true;
}

bool cycles(std::ostream& note)
{
    for (int n = 3; n <= 20; ++n) {
        const Nimber g = grundy(GameState::initial(build_cycle(n)));
        if (g != cycle_nimber(n) || (g.value != 0) != (n % 4 == 3)) {
            note << "C" << n;
            return false;
        }
    }
    return true;
}

bool table_one(std::ostream& note)
{
    const unsigned table[4][4] = {{1, 1, 1, 1}, {0, 2, 0, 2}, {3, 3, 3, 3}, {2, 0, 2, 0}};
    for (int n = 0; n < 4; ++n)
        for (int k = 0; k < 4; ++k) {
            const unsigned r = r_table(n, k).value;
            if (r != table[n][k] || r == static_cast<unsigned>(n)) {
                note << "cell (" << n << "," << k << ")";
                return false;
            }
        }
    return true;
}

bool union_examples(std::ostream&)
{
    for (const char* spec : {"P3,P6,P7", "C3,C4,C5,C6,C7"}) {
        const auto comps = parse_component_spec(spec);
        if (union_winner(comps) != Winner::Second)
            return false;
        if (normal_winner(GameState::initial(build_components(comps))) != Winner::Second)
            return false;
    }
    return true;
}

bool spider(std::ostream& note)
{
    const Nimber parts[] = {Nimber(1), Nimber(2), Nimber(3), Nimber(3), Nimber(3)};
    if (!nim_sum(parts).is_zero())
        return false;
    const auto g = std::make_shared<const Graph>(load_graph_file(std::string(DOMGAME_FIXTURES) + "/spider.graph"));
    ImpartialSolver solver(g);
    const Nimber start = solver.grundy(VertexMask{0});
    const bool hub_wins = solver.grundy(g->closed_mask(0)).is_zero();
    note << "grundy " << start.value;
    return !start.is_zero() && hub_wins;
}

bool value_table(std::ostream& note)
{
    const std::pair<const char*, const char*> expected[] = {
        {"A", "1"},     {"AB", "*"},     {"AAA", "2"},    {"AAB", "1/2"},  {"ABB", "-1/2"},
        {"ABA", "v"},   {"AAAA", "3"},   {"AAAB", "3/2"}, {"AABA", "3/4"}, {"AABB", "0"},
        {"BBAA", "0"},  {"ABAB", "0"},   {"BABA", "0"},   {"ABBA", "0"},   {"BAAB", "0"},
    };
    for (auto [colors, text] : expected)
        if (cgt::display(path_dp(colors)) != text) {
            note << colors;
            return false;
        }
    for (const char* colors : {"BAA", "ABAA"}) {
        const auto dp = path_dp(colors);
        const auto bf = partizan_value(GameState::initial(colored_path(colors)));
        if (dp != bf)
            return false;
        note << colors << "=" << cgt::display(bf) << " ";
    }
    return true;
}

bool dp_equivalence(std::ostream& note)
{
    for (int n = 1; n <= 10; ++n)
        for (std::uint32_t c = 0; c < (1u << n); ++c) {
            const auto s = coloring(n, c);
            if (path_dp(s) != partizan_value(GameState::initial(colored_path(s)))) {
                note << "path:" << s;
                return false;
            }
        }
    for (int m = 3; m <= 8; ++m)
        for (std::uint32_t c = 0; c < (1u << m); ++c) {
            const auto s = coloring(m, c);
            if (cycle_value(s) != partizan_value(GameState::initial(colored_cycle(s)))) {
                note << "cycle:" << s;
                return false;
            }
        }
    return true;
}

bool cgt_algebra(std::ostream& note)
{
    using namespace cgt;
    std::vector<GameValue> pool{zero(), integer(1), integer(-1), star()};
    std::vector<GameValue> values;
    std::vector<bool> seen;
    auto keep = [&](GameValue g) {
        if (g.id() >= seen.size())
            seen.resize(g.id() + 1, false);
        if (!seen[g.id()]) {
            seen[g.id()] = true;
            values.push_back(g);
        }
    };
    for (unsigned l = 0; l < 16; ++l)
        for (unsigned r = 0; r < 16; ++r) {
            std::vector<GameValue> lo, ro;
            for (int i = 0; i < 4; ++i) {
                if ((l >> i) & 1)
                    lo.push_back(pool[i]);
                if ((r >> i) & 1)
                    ro.push_back(pool[i]);
            }
            keep(make_game(lo, ro));
        }
    const std::vector<GameValue> day2 = values;
    for (auto a : day2)
        for (auto b : day2)
            keep(a + b);
    for (int k = -16; k <= 16; ++k)
        keep(number(Dyadic(k, 3)));
    note << values.size() << " values";
    if (values.size() < 200)
        return false;
    for (auto g : values) {
        if (g + (-g) != zero() || make_game(g.left(), g.right()) != g || !leq(g, g))
            return false;
    }
    for (auto a : values)
        for (auto b : values) {
            if (leq(a, b) && leq(b, a) && a != b)
                return false;
            if (leq(a, b) != leq(-b, -a))
                return false;
        }
    for (std::size_t i = 0; i < values.size(); i += 7)
        for (std::size_t j = 0; j < values.size(); j += 5)
            for (std::size_t k = 0; k < values.size(); k += 11) {
                const auto a = values[i], b = values[j], c = values[k];
                if (leq(a, b) && leq(b, c) && !leq(a, c))
                    return false;
                if (leq(a, b) && !leq(a + c, b + c))
                    return false;
            }
    const auto half = make_game({zero(), star()}, {integer(1)});
    return display(half) == "1/2" && half == number(Dyadic(1, 1));
}

bool reductions(std::ostream& note)
{
    int ran = 0;
    auto ok = [&](const ReductionReport& r, int diameter_needed) {
        ++ran;
        if (!r.passed() || (diameter_needed >= 0 && r.reduced_diameter != diameter_needed)) {
            note << to_string(r.kind) << " " << r.instance << " " << r.structure_detail;
            return false;
        }
        return true;
    };
    if (!ok(verify_normal_reduction(corpus::four_clause_example()), 2))
        return false;
    for (const auto& f : corpus::random_normalized_formulas(50, 5, 5, 20240601))
        if (!ok(verify_normal_reduction(f), 2))
            return false;
    for (int n = 1; n <= 7; ++n)
        for (const auto& h : corpus::connected_graphs(n)) {
            if (!ok(verify_misere_reduction(h), 4))
                return false;
            if (h.edge_count() == 0)
                continue;
            if (!ok(verify_partizan_reduction(h, Convention::normal), -1) ||
                !ok(verify_partizan_reduction(h, Convention::misere), -1))
                return false;
        }
    note << ran << " instances";
    return true;
}

bool misere_sweeps(std::ostream& note)
{
    const auto a = misere_sweep(Family::path, 14);
    const auto b = misere_sweep(Family::path, 14);
    const auto c = misere_sweep(Family::cycle, 12);
    const auto d = misere_sweep(Family::cycle, 12);
    if (a.size() != 14 || c.size() != 10)
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].winner != b[i].winner)
            return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].winner != d[i].winner)
            return false;
    for (const auto& r : a)
        note << (r.winner == Winner::First ? 'F' : 'S');
    return a[0].winner == Winner::Second && a[1].winner == Winner::Second && a[2].winner == Winner::First;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "path nimbers P1..P24", path_nimbers},
        {2, "marked path nimbers n mod 4, n <= 16", marked_paths},
        {3, "cycle nimbers C3..C20", cycles},
        {4, "r(n,k) table", table_one},
        {5, "union examples P3+P6+P7, C3+..+C7", union_examples},
        {6, "nim sum 1^2^3^3^3 and spider graph", spider},
        {7, "colored path value table", value_table},
        {8, "dp equals brute force, paths n<=10, cycles m<=8", dp_equivalence},
        {9, "game value algebra", cgt_algebra},
        {10, "reductions verified", reductions},
        {11, "misere sweeps path 14, cycle 12", misere_sweeps},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        std::ostringstream note;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check(note);
        } catch (const std::exception& e) {
            note << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char line[256];
        std::snprintf(line, sizeof line, "[%s] %2d %-50s %8.2fs  ", ok ? "PASS" : "FAIL", c.id, c.name, secs);
        std::cout << line << note.str() << std::endl;
        failed += ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
