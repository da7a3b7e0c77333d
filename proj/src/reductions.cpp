#include "domgame/reductions.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "domgame/errors.hpp"
#include "domgame/partizan.hpp"

namespace domgame {

DnfFormula::DnfFormula(int variable_count, std::vector<Conjunction> conjunctions)
    : variable_count_(variable_count), conjunctions_(std::move(conjunctions))
{
    if (variable_count_ < 0)
        throw InputError("negative variable count");
    for (auto& c : conjunctions_) {
        if (c.empty() || c.size() > 2)
            throw InputError("conjunctions must hold one or two variables");
        std::sort(c.begin(), c.end());
        if (c.size() == 2 && c[0] == c[1])
            throw InputError("conjunction repeats variable x" + std::to_string(c[0]));
        for (int v : c)
            if (v < 0 || v >= variable_count_)
                throw InputError("variable index " + std::to_string(v) + " out of range");
    }
}

std::vector<int> DnfFormula::occurrences() const
{
    std::vector<int> occ(variable_count_, 0);
    for (const auto& c : conjunctions_)
        for (int v : c)
            ++occ[v];
    return occ;
}

std::string to_string(const DnfFormula& f)
{
    std::string out;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (j)
            out += " | ";
        const auto& c = f.conjunctions()[j];
        out += "(x" + std::to_string(c[0]);
        if (c.size() == 2)
            out += " & x" + std::to_string(c[1]);
        out += ")";
    }
    if (out.empty())
        out = "(empty)";
    return out;
}

DnfFormula read_dnf(std::istream& in)
{
    std::vector<DnfFormula::Conjunction> conj;
    int max_index = -1;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        DnfFormula::Conjunction c;
        for (std::string tok; ls >> tok;) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size() || v < 0)
                    throw InputError("");
                c.push_back(v);
            } catch (const std::exception&) {
                throw InputError("dnf line " + std::to_string(line) + ": bad variable index '" + tok + "'");
            }
        }
        if (c.empty())
            continue;
        if (c.size() > 2)
            throw InputError("dnf line " + std::to_string(line) + ": more than two variables");
        for (int v : c)
            max_index = std::max(max_index, v);
        conj.push_back(std::move(c));
    }
    return DnfFormula(max_index + 1, std::move(conj));
}

DnfFormula parse_dnf(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_dnf(in);
}

DnfFormula load_dnf_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open formula file '" + path + "'");
    return read_dnf(in);
}

std::string dnf_to_text(const DnfFormula& f)
{
    std::string out;
    for (const auto& c : f.conjunctions()) {
        out += std::to_string(c[0]);
        if (c.size() == 2)
            out += " " + std::to_string(c[1]);
        out += "\n";
    }
    return out;
}

FormulaProperties formula_properties(const DnfFormula& f)
{
    const auto occ = f.occurrences();
    const int m = static_cast<int>(f.size());
    FormulaProperties p{true, true, true};
    for (int count : occ) {
        if (count == 0)
            p.every_variable_used = false;
        if (m > 0 && count == m)
            p.no_variable_in_all = false;
        if (count % 2 == 0)
            p.odd_occurrences = false;
    }
    return p;
}

DnfFormula normalize_formula(const DnfFormula& f)
{
    int vars = f.variable_count();
    std::vector<DnfFormula::Conjunction> conj = f.conjunctions();
    auto current = [&] { return DnfFormula(vars, conj); };

    for (int pass = 0; pass < 3; ++pass) {
        if (formula_properties(current()).all())
            return current();

        // Unused variables get a private partner.
        auto occ = current().occurrences();
        for (int v = 0; v < static_cast<int>(occ.size()); ++v)
            if (occ[v] == 0)
                conj.push_back({v, vars++});

        // A variable in every conjunction: add a lone fresh variable.
        if (!formula_properties(current()).no_variable_in_all)
            conj.push_back({vars++});

        // Even counts: pair each with a fresh x', then pad x' to an odd count.
        occ = current().occurrences();
        std::vector<int> even;
        for (int v = 0; v < static_cast<int>(occ.size()); ++v)
            if (occ[v] % 2 == 0)
                even.push_back(v);
        if (!even.empty()) {
            const int fresh = vars++;
            for (int v : even)
                conj.push_back({v, fresh});
            const int pad = even.size() % 2 == 0 ? 3 : 2;
            for (int k = 0; k < pad; ++k)
                conj.push_back({fresh});
        }
    }
    auto result = current();
    if (!formula_properties(result).all())
        throw InternalError("normalize_formula: properties still violated after three passes");
    return result;
}

Winner avoid_posdnf_winner(const DnfFormula& f, int max_variables)
{
    const int n = f.variable_count();
    if (n > max_variables || n > 63)
        throw SizeGuardError("formula has " + std::to_string(n) + " variables, above the search bound of " +
                             std::to_string(max_variables));
    // Setting v makes the formula true once any of its partner masks is set.
    std::vector<std::vector<std::uint64_t>> triggers(n);
    for (const auto& c : f.conjunctions()) {
        if (c.size() == 1) {
            triggers[c[0]].push_back(0);
        } else {
            triggers[c[0]].push_back(std::uint64_t{1} << c[1]);
            triggers[c[1]].push_back(std::uint64_t{1} << c[0]);
        }
    }
    const std::uint64_t all = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    std::unordered_map<std::uint64_t, bool> table;
    auto solve = [&](auto&& self, std::uint64_t chosen) -> bool {
        if (auto it = table.find(chosen); it != table.end())
            return it->second;
        bool wins = false;
        for (std::uint64_t m = all & ~chosen; m != 0 && !wins; m &= m - 1) {
            const int v = std::countr_zero(m);
            const bool completes = std::any_of(triggers[v].begin(), triggers[v].end(),
                                               [&](std::uint64_t need) { return (need & ~chosen) == 0; });
            if (!completes)
                wins = !self(self, chosen | (std::uint64_t{1} << v));
        }
        table.emplace(chosen, wins);
        return wins;
    };
    return solve(solve, 0) ? Winner::First : Winner::Second;
}

std::vector<std::string> ReductionGraph::role_comments() const
{
    std::vector<std::string> out;
    out.push_back("normal-play reduction: " + std::to_string(graph.vertex_count()) + " vertices");
    std::vector<std::string> role(graph.vertex_count());
    for (std::size_t i = 0; i < v_cliques.size(); ++i)
        for (Vertex v : v_cliques[i])
            role[v] = "V_" + std::to_string(i);
    for (std::size_t j = 0; j < q_sets.size(); ++j)
        for (Vertex v : q_sets[j])
            role[v] = "Q^" + std::to_string(j) + " " + role[v];
    for (std::size_t j = 0; j < c_vertices.size(); ++j) {
        role[c_vertices[j].first] = "c_" + std::to_string(j);
        role[c_vertices[j].second] = "cbar_" + std::to_string(j);
    }
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
        out.push_back("v" + std::to_string(v) + " " + role[v]);
    return out;
}

ReductionGraph build_normal_reduction(const DnfFormula& f)
{
    if (!formula_properties(f).all())
        throw InputError("normal reduction needs a normalized formula");
    const int m = static_cast<int>(f.size());
    if (m < 3)
        throw InputError("normal reduction needs at least three conjunctions");

    ReductionGraph r;
    r.q_sets.resize(m);
    r.v_cliques.resize(f.variable_count());
    int next = 0;
    for (int j = 0; j < m; ++j)
        for (int var : f.conjunctions()[j]) {
            r.q_sets[j].push_back(next);
            r.v_cliques[var].push_back(next);
            ++next;
        }
    const int q_count = next;
    for (int j = 0; j < m; ++j) {
        r.c_vertices.emplace_back(next, next + 1);
        next += 2;
    }

    std::vector<Edge> edges;
    for (const auto& clique : r.v_cliques)
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                edges.emplace_back(clique[a], clique[b]);
    for (int u = q_count; u < next; ++u)
        for (int w = u + 1; w < next; ++w)
            edges.emplace_back(u, w);
    for (int j = 0; j < m; ++j) {
        const auto [c, cbar] = r.c_vertices[j];
        for (int l = 0; l < m; ++l)
            for (Vertex q : r.q_sets[l])
                edges.emplace_back(l == j ? c : cbar, q);
    }
    r.graph = Graph(next, edges);
    return r;
}

Graph build_misere_reduction(const Graph& h)
{
    const int n = h.vertex_count();
    if (n == 0)
        throw InputError("misere reduction needs a nonempty graph");
    if (h.colored())
        throw UsageError("misere reduction takes an uncolored graph");
    auto edges = h.edges();
    const Vertex x1 = n, x2 = n + 1, x3 = n + 2, y1 = n + 3, y2 = n + 4, y3 = n + 5;
    edges.emplace_back(x1, x2);
    edges.emplace_back(x1, x3);
    edges.emplace_back(y1, y2);
    edges.emplace_back(y1, y3);
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(x1, v);
        edges.emplace_back(y1, v);
    }
    return Graph(n + 6, edges);
}

std::vector<std::string> misere_role_comments(const Graph& h)
{
    const int n = h.vertex_count();
    std::vector<std::string> out{"misere reduction: v0..v" + std::to_string(n - 1) + " are H"};
    const char* names[] = {"x1", "x2", "x3", "y1", "y2", "y3"};
    for (int k = 0; k < 6; ++k)
        out.push_back("v" + std::to_string(n + k) + " " + names[k]);
    return out;
}

Graph build_partizan_reduction(const Graph& h)
{
    if (h.edge_count() == 0)
        throw InputError("partizan reduction needs a graph with at least one edge");
    if (h.colored())
        throw UsageError("partizan reduction takes an uncolored graph");
    const int n = h.vertex_count();
    std::vector<Edge> edges;
    for (auto [u, v] : h.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + n, v + n);
        edges.emplace_back(u, v + n);
        edges.emplace_back(v, u + n);
    }
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, v + n);
    std::vector<Color> colors(2 * n, Color::A);
    std::fill(colors.begin() + n, colors.end(), Color::B);
    return Graph(2 * n, edges, std::move(colors));
}

std::vector<std::string> partizan_role_comments(const Graph& h)
{
    const int n = h.vertex_count();
    return {"partizan reduction: v0..v" + std::to_string(n - 1) + " are H (color A)",
            "v" + std::to_string(n) + "..v" + std::to_string(2 * n - 1) + " are the twins v' = v + " +
                std::to_string(n) + " (color B)"};
}

std::string_view to_string(ReductionKind k)
{
    switch (k) {
    case ReductionKind::normal: return "normal";
    case ReductionKind::misere: return "misere";
    case ReductionKind::partizan: return "partizan";
    }
    return "?";
}

namespace {

bool is_clique(const Graph& g, std::span<const Vertex> vs)
{
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (!g.adjacent(vs[a], vs[b]))
                return false;
    return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vs)
{
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (g.adjacent(vs[a], vs[b]))
                return false;
    return true;
}

std::string graph_label(const Graph& h)
{
    std::string s = "n=" + std::to_string(h.vertex_count()) + " E={";
    bool first = true;
    for (auto [u, v] : h.edges()) {
        if (!first)
            s += ",";
        first = false;
        s += std::to_string(u) + "-" + std::to_string(v);
    }
    return s + "}";
}

std::string check_normal_structure(const ReductionGraph& r, const DnfFormula& f)
{
    const Graph& g = r.graph;
    std::size_t occurrences = 0;
    for (const auto& c : f.conjunctions())
        occurrences += c.size();
    if (g.vertex_count() != static_cast<int>(occurrences + 2 * f.size()))
        return "vertex count";
    for (const auto& q : r.q_sets)
        if (!is_independent(g, q))
            return "Q^j not independent";
    for (const auto& v : r.v_cliques)
        if (!is_clique(g, v) || v.size() % 2 == 0)
            return "V_i not an odd clique";
    std::vector<Vertex> c_all;
    for (auto [c, cbar] : r.c_vertices) {
        c_all.push_back(c);
        c_all.push_back(cbar);
    }
    if (!is_clique(g, c_all))
        return "C not a clique";
    for (std::size_t j = 0; j < r.c_vertices.size(); ++j) {
        std::vector<Vertex> want_c, want_cbar;
        for (std::size_t l = 0; l < r.q_sets.size(); ++l)
            for (Vertex q : r.q_sets[l])
                (l == j ? want_c : want_cbar).push_back(q);
        const auto [c, cbar] = r.c_vertices[j];
        for (Vertex x : c_all) {
            if (x != c)
                want_c.push_back(x);
            if (x != cbar)
                want_cbar.push_back(x);
        }
        std::sort(want_c.begin(), want_c.end());
        std::sort(want_cbar.begin(), want_cbar.end());
        if (!std::ranges::equal(g.neighbors(c), want_c) || !std::ranges::equal(g.neighbors(cbar), want_cbar))
            return "c_j / cbar_j adjacency";
    }
    if (diameter(g) != 2)
        return "diameter " + std::to_string(diameter(g)) + " != 2";
    return {};
}

bool matches(Winner impartial, Outcome partizan)
{
    return (impartial == Winner::First && partizan == Outcome::FirstWins) ||
           (impartial == Winner::Second && partizan == Outcome::SecondWins);
}

} // namespace

ReductionReport verify_normal_reduction(const DnfFormula& f, int max_vertices)
{
    ReductionReport rep{.kind = ReductionKind::normal, .instance = to_string(f)};
    const DnfFormula normalized = normalize_formula(f);
    const ReductionGraph r = build_normal_reduction(normalized);
    rep.reduced_vertices = r.graph.vertex_count();
    rep.reduced_diameter = diameter(r.graph);
    rep.structure_detail = check_normal_structure(r, normalized);
    rep.structure_ok = rep.structure_detail.empty();

    const Winner source = avoid_posdnf_winner(f, max_vertices);
    const Winner reduced = normal_winner(GameState::initial(r.graph), max_vertices);
    rep.source_winner = to_string(source);
    rep.reduced_winner = to_string(reduced);
    rep.winners_match = source == reduced;
    return rep;
}

ReductionReport verify_misere_reduction(const Graph& h, int max_vertices)
{
    ReductionReport rep{.kind = ReductionKind::misere, .instance = graph_label(h)};
    const Graph g = build_misere_reduction(h);
    const int n = h.vertex_count();
    rep.reduced_vertices = g.vertex_count();
    rep.reduced_diameter = diameter(g);
    if (rep.reduced_diameter != 4)
        rep.structure_detail = "diameter " + std::to_string(rep.reduced_diameter) + " != 4";
    for (Vertex pendant : {n + 1, n + 2, n + 4, n + 5})
        if (g.neighbors(pendant).size() != 1)
            rep.structure_detail = "pendant vertex degree";
    for (Vertex v = 0; v < n; ++v)
        if (!g.adjacent(v, n) || !g.adjacent(v, n + 3))
            rep.structure_detail = "x1/y1 not universal to H";
    rep.structure_ok = rep.structure_detail.empty();

    const Winner source = normal_winner(GameState::initial(h), max_vertices);
    const Winner reduced = misere_winner(GameState::initial(g), max_vertices);
    rep.source_winner = to_string(source);
    rep.reduced_winner = to_string(reduced);
    rep.winners_match = source == reduced;
    return rep;
}

ReductionReport verify_partizan_reduction(const Graph& h, Convention convention, int max_vertices)
{
    ReductionReport rep{.kind = ReductionKind::partizan, .instance = graph_label(h)};
    if (convention == Convention::misere)
        rep.instance += " (misere)";
    const Graph g = build_partizan_reduction(h);
    const int n = h.vertex_count();
    rep.reduced_vertices = g.vertex_count();
    rep.reduced_diameter = diameter(g);
    if (rep.reduced_diameter != diameter(h))
        rep.structure_detail = "diameter changed";
    for (Vertex v = 0; v < n; ++v)
        if (g.closed_neighborhood(v) != g.closed_neighborhood(v + n) || g.color(v) != Color::A ||
            g.color(v + n) != Color::B)
            rep.structure_detail = "twin v' does not match v";
    rep.structure_ok = rep.structure_detail.empty();

    const auto hs = GameState::initial(h);
    const auto gs = GameState::initial(g);
    Winner source;
    Outcome reduced;
    if (convention == Convention::normal) {
        source = normal_winner(hs, max_vertices);
        reduced = partizan_winner(partizan_value(gs, max_vertices));
    } else {
        source = misere_winner(hs, max_vertices);
        reduced = misere_outcome(gs, max_vertices);
    }
    rep.source_winner = to_string(source);
    rep.reduced_winner = winner_label(reduced);
    rep.winners_match = matches(source, reduced);
    return rep;
}

} // namespace domgame
