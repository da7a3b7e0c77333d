#include "domgame/partizan.hpp"

#include <bit>

#include "domgame/errors.hpp"

namespace domgame {

using cgt::GameValue;

PartizanSolver::PartizanSolver(std::shared_ptr<const Graph> graph, int max_vertices) : graph_(std::move(graph))
{
    if (!graph_)
        throw UsageError("solver needs a graph");
    if (!graph_->colored())
        throw UsageError("partizan solver needs a colored graph");
    if (graph_->vertex_count() > max_vertices || graph_->vertex_count() > kMaxMaskVertices)
        throw SizeGuardError("graph has " + std::to_string(graph_->vertex_count()) +
                             " vertices, above the search bound of " + std::to_string(max_vertices));
    all_ = full_mask(graph_->vertex_count());
    alice_ = graph_->color_mask(Color::A);
    bob_ = graph_->color_mask(Color::B);
}

GameValue PartizanSolver::value(VertexMask dominated)
{
    if ((dominated & ~all_) != 0)
        throw InputError("dominated set names vertices outside the graph");
    return position(dominated);
}

GameValue PartizanSolver::position(VertexMask dominated)
{
    GameValue sum;
    if (dominated == all_)
        return sum;
    for (VertexMask comp : live_component_masks(*graph_, dominated))
        sum = sum + component(dominated | (all_ & ~comp));
    return sum;
}

GameValue PartizanSolver::component(VertexMask dominated)
{
    if (auto it = table_.find(dominated); it != table_.end())
        return it->second;
    std::vector<GameValue> left, right;
    const VertexMask playable = playable_mask(*graph_, dominated);
    for (VertexMask m = playable & alice_; m != 0; m &= m - 1)
        left.push_back(position(dominated | graph_->closed_mask(std::countr_zero(m))));
    for (VertexMask m = playable & bob_; m != 0; m &= m - 1)
        right.push_back(position(dominated | graph_->closed_mask(std::countr_zero(m))));
    GameValue result = cgt::make_game(left, right);
    table_.emplace(dominated, result);
    return result;
}

GameValue partizan_value(const GameState& s, int max_vertices)
{
    PartizanSolver solver(s.graph_ptr(), max_vertices);
    return solver.value(s.dominated());
}

IntervalTables::IntervalTables(int n)
    : n_(n), p_((n + 2) * (n + 2)), x_((n + 2) * (n + 2)), y_((n + 2) * (n + 2)), z_((n + 2) * (n + 2))
{
}

GameValue IntervalTables::at(const Table& t, int i, int j) const
{
    if (i < 1 || i > n_ + 1 || j < 0 || j > n_)
        throw InputError("interval (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    return t[static_cast<std::size_t>(i) * (n_ + 2) + j];
}

GameValue& IntervalTables::slot(Table& t, int i, int j) { return t[static_cast<std::size_t>(i) * (n_ + 2) + j]; }

IntervalTables path_tables(std::span<const Color> colors)
{
    const int n = static_cast<int>(colors.size());
    if (n < 1)
        throw InputError("path needs at least one vertex");
    IntervalTables t(n);
    auto color = [&](int i) { return colors[i - 1]; };

    const GameValue one = cgt::integer(1);
    const GameValue minus_one = cgt::integer(-1);
    const GameValue star = cgt::star();

    // Tables start at zero, which covers every empty or fully dominated
    // interval. Single vertices and adjacent pairs are set directly.
    for (int i = 1; i <= n; ++i) {
        t.slot(t.p_, i, i) = color(i) == Color::A ? one : minus_one;
        if (i + 1 <= n) {
            GameValue pair = star;
            if (color(i) == Color::A && color(i + 1) == Color::A)
                pair = one;
            else if (color(i) == Color::B && color(i + 1) == Color::B)
                pair = minus_one;
            t.slot(t.p_, i, i + 1) = pair;
            t.slot(t.x_, i, i + 1) = pair;
            t.slot(t.y_, i, i + 1) = pair;
        }
    }

    std::vector<GameValue> options[4][2];
    for (int len = 2; len < n; ++len) {
        for (int i = 1; i + len <= n; ++i) {
            const int j = i + len;
            for (auto& kind : options)
                for (auto& side : kind)
                    side.clear();
            for (int k = i; k <= j; ++k) {
                const int side = color(k) == Color::A ? 0 : 1;
                options[0][side].push_back(t.Y(i, k - 1) + t.X(k + 1, j));
                options[1][side].push_back(t.Z(i, k - 1) + t.X(k + 1, j));
                options[2][side].push_back(t.Y(i, k - 1) + t.Z(k + 1, j));
                options[3][side].push_back(t.Z(i, k - 1) + t.Z(k + 1, j));
            }
            t.slot(t.p_, i, j) = cgt::make_game(options[0][0], options[0][1]);
            t.slot(t.x_, i, j) = cgt::make_game(options[1][0], options[1][1]);
            t.slot(t.y_, i, j) = cgt::make_game(options[2][0], options[2][1]);
            t.slot(t.z_, i, j) = cgt::make_game(options[3][0], options[3][1]);
        }
    }
    return t;
}

GameValue path_dp(std::string_view colors)
{
    const auto parsed = parse_colors(colors);
    return path_tables(parsed).P(1, static_cast<int>(parsed.size()));
}

GameValue cycle_value(std::string_view colors)
{
    const auto parsed = parse_colors(colors);
    const int m = static_cast<int>(parsed.size());
    if (m < 3)
        throw InputError("cycle needs at least 3 vertices");
    std::vector<GameValue> left, right;
    std::vector<Color> rest(m - 1);
    for (int k = 0; k < m; ++k) {
        for (int step = 1; step < m; ++step)
            rest[step - 1] = parsed[(k + step) % m];
        const GameValue option = path_tables(rest).Z(1, m - 1);
        (parsed[k] == Color::A ? left : right).push_back(option);
    }
    return cgt::make_game(left, right);
}

Outcome partizan_winner(GameValue value) { return cgt::outcome(value); }

} // namespace domgame
