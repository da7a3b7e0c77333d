#include "domgame/impartial.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "domgame/errors.hpp"

namespace domgame {

std::string_view to_string(Winner w) { return w == Winner::First ? "First" : "Second"; }

Nimber mex(std::span<const Nimber> values)
{
    // A set of k values always misses something in [0, k].
    std::vector<bool> seen(values.size() + 1, false);
    for (Nimber v : values)
        if (v.value < seen.size())
            seen[v.value] = true;
    std::uint32_t m = 0;
    while (seen[m])
        ++m;
    return Nimber(m);
}

Nimber nim_sum(std::span<const Nimber> values)
{
    Nimber acc;
    for (Nimber v : values)
        acc ^= v;
    return acc;
}

ImpartialSolver::ImpartialSolver(std::shared_ptr<const Graph> graph) : ImpartialSolver(std::move(graph), Options{}) {}

ImpartialSolver::ImpartialSolver(std::shared_ptr<const Graph> graph, Options options)
    : graph_(std::move(graph)), options_(options)
{
    if (!graph_)
        throw UsageError("solver needs a graph");
    if (graph_->colored())
        throw UsageError("impartial solver called on a colored graph");
    if (graph_->vertex_count() > options_.max_vertices || graph_->vertex_count() > kMaxMaskVertices)
        throw SizeGuardError("graph has " + std::to_string(graph_->vertex_count()) +
                             " vertices, above the search bound of " + std::to_string(options_.max_vertices));
    all_ = full_mask(graph_->vertex_count());
}

Nimber ImpartialSolver::grundy(const GameState& s)
{
    if (s.graph_ptr() != graph_ && !(s.graph() == *graph_))
        throw UsageError("state belongs to a different graph");
    return grundy(s.dominated());
}

Nimber ImpartialSolver::grundy(VertexMask dominated)
{
    if ((dominated & ~all_) != 0)
        throw InputError("dominated set names vertices outside the graph");
    return position(dominated);
}

Nimber ImpartialSolver::position(VertexMask dominated)
{
    if (dominated == all_)
        return Nimber{};
    if (!options_.decompose)
        return component(live_mask(*graph_, dominated), dominated);
    Nimber acc;
    for (VertexMask comp : live_component_masks(*graph_, dominated))
        acc ^= component(comp, dominated | (all_ & ~comp));
    return acc;
}

// `dominated` already marks everything outside `live`.
Nimber ImpartialSolver::component(VertexMask live, VertexMask dominated)
{
    const Key key{live, dominated};
    if (options_.use_table)
        if (auto it = table_.find(key); it != table_.end())
            return it->second;

    std::vector<Nimber> options;
    for (VertexMask m = playable_mask(*graph_, dominated); m != 0; m &= m - 1) {
        const Vertex v = std::countr_zero(m);
        options.push_back(position(dominated | graph_->closed_mask(v)));
    }
    const Nimber result = mex(options);
    if (options_.use_table)
        table_.emplace(key, result);
    return result;
}

std::optional<Vertex> ImpartialSolver::best_move(VertexMask dominated)
{
    if (dominated == all_)
        throw UsageError("no move exists in a terminal position");
    if (grundy(dominated).is_zero())
        return std::nullopt;
    for (VertexMask m = playable_mask(*graph_, dominated); m != 0; m &= m - 1) {
        const Vertex v = std::countr_zero(m);
        if (position(dominated | graph_->closed_mask(v)).is_zero())
            return v;
    }
    throw InternalError("nonzero nimber without a move to zero");
}

Nimber grundy(const GameState& s, int max_vertices)
{
    ImpartialSolver solver(s.graph_ptr(), {.max_vertices = max_vertices});
    return solver.grundy(s.dominated());
}

Winner normal_winner(const GameState& s, int max_vertices)
{
    return grundy(s, max_vertices).is_zero() ? Winner::Second : Winner::First;
}

std::optional<Vertex> best_move_normal(const GameState& s, int max_vertices)
{
    ImpartialSolver solver(s.graph_ptr(), {.max_vertices = max_vertices});
    return solver.best_move(s.dominated());
}

} // namespace domgame
