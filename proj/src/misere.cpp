#include "domgame/misere.hpp"

#include <bit>
#include <sstream>

#include "domgame/errors.hpp"

namespace domgame {

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::AliceWins: return "AliceWins";
    case Outcome::BobWins: return "BobWins";
    case Outcome::FirstWins: return "FirstWins";
    case Outcome::SecondWins: return "SecondWins";
    }
    return "?";
}

std::string_view winner_label(Outcome o)
{
    switch (o) {
    case Outcome::AliceWins: return "Alice";
    case Outcome::BobWins: return "Bob";
    case Outcome::FirstWins: return "First";
    case Outcome::SecondWins: return "Second";
    }
    return "?";
}

MinimaxSolver::MinimaxSolver(std::shared_ptr<const Graph> graph, Convention convention, int max_vertices)
    : graph_(std::move(graph)), convention_(convention)
{
    if (!graph_)
        throw UsageError("solver needs a graph");
    if (graph_->vertex_count() > max_vertices || graph_->vertex_count() > kMaxMaskVertices)
        throw SizeGuardError("graph has " + std::to_string(graph_->vertex_count()) +
                             " vertices, above the search bound of " + std::to_string(max_vertices));
    all_ = full_mask(graph_->vertex_count());
    if (graph_->colored()) {
        own_[0] = graph_->color_mask(Color::A);
        own_[1] = graph_->color_mask(Color::B);
    } else {
        own_[0] = own_[1] = all_;
    }
}

bool MinimaxSolver::mover_wins(VertexMask dominated, std::optional<Color> mover)
{
    if (graph_->colored() != mover.has_value())
        throw UsageError(graph_->colored() ? "colored graph: the mover must be specified"
                                           : "uncolored graph: no mover may be specified");
    if ((dominated & ~all_) != 0)
        throw InputError("dominated set names vertices outside the graph");
    return solve(dominated, mover == Color::B ? 1 : 0);
}

bool MinimaxSolver::solve(VertexMask dominated, int mover)
{
    auto& table = table_[mover];
    if (auto it = table.find(dominated); it != table.end())
        return it->second;

    const VertexMask moves = playable_mask(*graph_, dominated) & own_[mover];
    bool wins = false;
    if (moves == 0) {
        wins = stuck_mover_wins(convention_, dominated == all_);
    } else {
        const int next = graph_->colored() ? 1 - mover : mover;
        for (VertexMask m = moves; m != 0 && !wins; m &= m - 1)
            wins = !solve(dominated | graph_->closed_mask(std::countr_zero(m)), next);
    }
    table.emplace(dominated, wins);
    return wins;
}

Winner misere_winner(const GameState& s, int max_vertices)
{
    if (s.graph().colored())
        throw UsageError("misere_winner: use misere_outcome for colored graphs");
    MinimaxSolver solver(s.graph_ptr(), Convention::misere, max_vertices);
    return solver.mover_wins(s.dominated()) ? Winner::First : Winner::Second;
}

Outcome misere_outcome(const GameState& s, int max_vertices)
{
    if (!s.graph().colored())
        throw UsageError("misere_outcome needs a colored graph");
    MinimaxSolver solver(s.graph_ptr(), Convention::misere, max_vertices);
    return outcome_from(solver.mover_wins(s.dominated(), Color::A), solver.mover_wins(s.dominated(), Color::B));
}

namespace {

int family_start(Family f) { return f == Family::path ? 1 : 3; }

Graph family_graph(Family f, int n) { return f == Family::path ? build_path(n) : build_cycle(n); }

std::string_view family_name(Family f) { return f == Family::path ? "path" : "cycle"; }

} // namespace

std::vector<SweepRow> misere_sweep(Family family, int max_n, int max_vertices)
{
    if (max_n > max_vertices)
        throw SizeGuardError("sweep bound " + std::to_string(max_n) + " exceeds the search bound of " +
                             std::to_string(max_vertices));
    std::vector<SweepRow> rows;
    for (int n = family_start(family); n <= max_n; ++n)
        rows.push_back({n, misere_winner(GameState::initial(family_graph(family, n)), max_vertices)});
    return rows;
}

std::vector<PartizanSweepRow> misere_partizan_sweep(Family family, int max_n, int max_vertices)
{
    if (max_n > max_vertices)
        throw SizeGuardError("sweep bound " + std::to_string(max_n) + " exceeds the search bound of " +
                             std::to_string(max_vertices));
    std::vector<PartizanSweepRow> rows;
    for (int n = family_start(family); n <= max_n; ++n) {
        const Graph base = family_graph(family, n);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
            std::vector<Color> colors(n);
            for (int v = 0; v < n; ++v)
                colors[v] = (code >> (n - 1 - v)) & 1 ? Color::B : Color::A;
            auto s = GameState::initial(base.with_colors(colors));
            rows.push_back({n, colors_to_string(colors), misere_outcome(s, max_vertices)});
        }
    }
    return rows;
}

std::string sweep_tsv(Family family, std::span<const SweepRow> rows)
{
    std::ostringstream os;
    os << "# misere play (last mover loses), impartial " << family_name(family)
       << "; exhaustive search, conjecture data\n";
    os << "# n\twinner\n";
    for (const auto& r : rows)
        os << r.n << '\t' << to_string(r.winner) << '\n';
    return os.str();
}

std::string sweep_tsv(Family family, std::span<const PartizanSweepRow> rows)
{
    std::ostringstream os;
    os << "# misere play (last mover loses; a player with no vertex of their color loses), partizan "
       << family_name(family) << "; exhaustive search, conjecture data\n";
    os << "# n\tcolors\twinner\n";
    for (const auto& r : rows)
        os << r.n << '\t' << r.colors << '\t' << winner_label(r.outcome) << '\n';
    return os.str();
}

} // namespace domgame
