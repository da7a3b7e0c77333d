#include "domgame/game_state.hpp"

#include <bit>

#include "domgame/errors.hpp"

namespace domgame {

GameState::GameState(std::shared_ptr<const Graph> graph, VertexMask dominated)
    : graph_(std::move(graph)), dominated_(dominated)
{
    if (!graph_)
        throw UsageError("GameState needs a graph");
    if (graph_->vertex_count() > kMaxMaskVertices)
        throw SizeGuardError("game positions support at most 64 vertices, got " +
                             std::to_string(graph_->vertex_count()));
    if ((dominated_ & ~full_mask(graph_->vertex_count())) != 0)
        throw InputError("dominated set names vertices outside the graph");
}

int GameState::undominated_count() const
{
    return graph_->vertex_count() - std::popcount(dominated_);
}

bool GameState::terminal() const { return dominated_ == full_mask(graph_->vertex_count()); }

VertexMask playable_mask(const Graph& g, VertexMask dominated)
{
    VertexMask out = 0;
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if ((g.closed_mask(v) & ~dominated) != 0)
            out |= bit(v);
    return out;
}

VertexMask live_mask(const Graph& g, VertexMask dominated)
{
    return (full_mask(g.vertex_count()) & ~dominated) | playable_mask(g, dominated);
}

std::vector<VertexMask> live_component_masks(const Graph& g, VertexMask dominated)
{
    std::vector<VertexMask> out;
    VertexMask remaining = live_mask(g, dominated);
    while (remaining != 0) {
        VertexMask comp = remaining & (~remaining + 1);
        VertexMask frontier = comp;
        while (frontier != 0) {
            VertexMask next = 0;
            for (VertexMask f = frontier; f != 0; f &= f - 1)
                next |= g.closed_mask(std::countr_zero(f));
            next &= remaining & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        remaining &= ~comp;
    }
    return out;
}

std::vector<Vertex> playable_moves(const GameState& s, std::optional<Color> mover)
{
    const Graph& g = s.graph();
    if (g.colored() && !mover)
        throw UsageError("colored graph: the mover must be specified");
    if (!g.colored() && mover)
        throw UsageError("uncolored graph: no mover may be specified");
    VertexMask m = playable_mask(g, s.dominated());
    if (mover)
        m &= g.color_mask(*mover);
    std::vector<Vertex> out;
    for (; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

GameState apply_move(const GameState& s, Vertex v)
{
    const Graph& g = s.graph();
    if (v < 0 || v >= g.vertex_count())
        throw IllegalMoveError("vertex " + std::to_string(v) + " does not exist");
    VertexMask gain = g.closed_mask(v) & ~s.dominated();
    if (gain == 0)
        throw IllegalMoveError("vertex " + std::to_string(v) + " dominates nothing new");
    return s.with_dominated(s.dominated() | gain);
}

std::vector<GameState> live_components(const GameState& s)
{
    std::vector<GameState> out;
    const VertexMask all = full_mask(s.graph().vertex_count());
    for (VertexMask comp : live_component_masks(s.graph(), s.dominated()))
        out.push_back(s.with_dominated(s.dominated() | (all & ~comp)));
    return out;
}

GameState marked_path(PathMark kind, int n)
{
    if (n < 0)
        throw InputError("marked path needs n >= 0");
    switch (kind) {
    case PathMark::plain:
        if (n < 1)
            throw InputError("plain path needs n >= 1");
        return GameState::initial(build_path(n));
    case PathMark::prime: {
        auto g = std::make_shared<const Graph>(build_path(n + 2));
        return GameState(g, g->closed_mask(0));
    }
    case PathMark::doubleprime: {
        auto g = std::make_shared<const Graph>(build_path(n + 4));
        return GameState(g, g->closed_mask(0) | g->closed_mask(n + 3));
    }
    }
    throw InputError("unknown path kind");
}

} // namespace domgame
