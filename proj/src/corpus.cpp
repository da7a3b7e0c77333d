#include "domgame/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "domgame/errors.hpp"

namespace domgame::corpus {

namespace {

std::uint64_t code_under(const Graph& g, const std::vector<Vertex>& order)
{
    std::uint64_t code = 0;
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
    return code;
}

} // namespace

std::uint64_t canonical_code(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 11)
        throw SizeGuardError("canonical_code supports at most 11 vertices");

    // Order vertices by an isomorphism invariant, then try every ordering
    // that permutes only within equal-invariant blocks.
    std::vector<std::pair<std::vector<int>, Vertex>> keyed;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> inv{static_cast<int>(g.neighbors(v).size())};
        std::vector<int> nd;
        for (Vertex u : g.neighbors(v))
            nd.push_back(static_cast<int>(g.neighbors(u).size()));
        std::sort(nd.begin(), nd.end());
        inv.insert(inv.end(), nd.begin(), nd.end());
        keyed.emplace_back(std::move(inv), v);
    }
    std::sort(keyed.begin(), keyed.end());

    std::vector<std::pair<int, int>> blocks; // [begin, end)
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && keyed[j].first == keyed[i].first)
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = keyed[i].second;
    for (auto [b, e] : blocks)
        std::sort(order.begin() + b, order.begin() + e);

    std::uint64_t best = ~std::uint64_t{0};
    // Odometer over per-block permutations.
    auto recurse = [&](auto&& self, std::size_t block) -> void {
        if (block == blocks.size()) {
            best = std::min(best, code_under(g, order));
            return;
        }
        auto [b, e] = blocks[block];
        do {
            self(self, block + 1);
        } while (std::next_permutation(order.begin() + b, order.begin() + e));
    };
    recurse(recurse, 0);
    return best;
}

std::vector<Graph> all_graphs(int n)
{
    if (n < 1 || n > 8)
        throw InputError("all_graphs supports 1 <= n <= 8");
    std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
    for (int k = 2; k <= n; ++k) {
        std::map<std::uint64_t, Graph> next;
        for (const Graph& g : level) {
            const auto base = g.edges();
            for (std::uint32_t subset = 0; subset < (1u << (k - 1)); ++subset) {
                std::vector<Edge> e = base;
                for (int v = 0; v < k - 1; ++v)
                    if (subset & (1u << v))
                        e.emplace_back(v, k - 1);
                Graph candidate(k, e);
                next.try_emplace(canonical_code(candidate), std::move(candidate));
            }
        }
        level.clear();
        for (auto& [code, g] : next)
            level.push_back(std::move(g));
    }
    return level;
}

std::vector<Graph> connected_graphs(int n)
{
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (connected(g))
            out.push_back(std::move(g));
    return out;
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                e.emplace_back(u, v);
    return Graph(n, e);
}

std::vector<DnfFormula> random_normalized_formulas(int count, int max_vars, int max_conj, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::set<std::vector<std::vector<int>>> seen;
    std::vector<DnfFormula> out;
    for (long attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
        if (attempt > 2'000'000)
            throw InternalError("random_normalized_formulas: could not find enough formulas");
        const int vars = std::uniform_int_distribution<int>(1, max_vars)(rng);
        const int m = std::uniform_int_distribution<int>(3, max_conj)(rng);
        std::vector<std::vector<int>> conj;
        for (int j = 0; j < m; ++j) {
            std::vector<int> c{std::uniform_int_distribution<int>(0, vars - 1)(rng)};
            if (vars > 1 && std::bernoulli_distribution(0.6)(rng)) {
                int other = std::uniform_int_distribution<int>(0, vars - 2)(rng);
                if (other >= c[0])
                    ++other;
                c.push_back(other);
            }
            std::sort(c.begin(), c.end());
            conj.push_back(std::move(c));
        }
        std::sort(conj.begin(), conj.end());
        DnfFormula f(vars, conj);
        if (!formula_properties(f).all() || !seen.insert(conj).second)
            continue;
        out.push_back(std::move(f));
    }
    return out;
}

DnfFormula four_clause_example() { return DnfFormula(6, {{0, 3}, {1, 3}, {2, 3}, {4, 5}}); }

} // namespace domgame::corpus
