#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

/// A domination-game position: the graph plus the set of dominated vertices.
///
/// Which vertices were selected is never stored; legality of all future
/// moves depends only on the dominated set.
class GameState {
public:
    /// Throws SizeGuardError for graphs with more than 64 vertices and
    /// InputError if `dominated` names vertices outside the graph.
    explicit GameState(std::shared_ptr<const Graph> graph, VertexMask dominated = 0);

    static GameState initial(Graph g) { return GameState(std::make_shared<const Graph>(std::move(g))); }

    const Graph& graph() const { return *graph_; }
    const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
    VertexMask dominated() const { return dominated_; }
    int undominated_count() const;
    bool terminal() const;

    GameState with_dominated(VertexMask dominated) const { return GameState(graph_, dominated); }

    bool operator==(const GameState& other) const
    {
        return dominated_ == other.dominated_ && (graph_ == other.graph_ || *graph_ == *other.graph_);
    }

private:
    std::shared_ptr<const Graph> graph_;
    VertexMask dominated_;
};

// Mask-level primitives used by every engine's inner loop.

/// Vertices whose closed neighborhood contains an undominated vertex.
VertexMask playable_mask(const Graph& g, VertexMask dominated);

/// Undominated or playable vertices.
VertexMask live_mask(const Graph& g, VertexMask dominated);

/// Connected components of the subgraph induced by the live vertices.
std::vector<VertexMask> live_component_masks(const Graph& g, VertexMask dominated);

/// Playable vertices, ascending. `mover` must be given iff the graph is
/// colored (UsageError otherwise); it restricts to that color.
std::vector<Vertex> playable_moves(const GameState& s, std::optional<Color> mover = std::nullopt);

/// dominated ∪ N[v]. Throws IllegalMoveError if v is not playable.
GameState apply_move(const GameState& s, Vertex v);

/// One sub-state per live component. Every vertex outside the component is
/// marked dominated in the sub-state, which leaves exactly that component's
/// game. A terminal state yields an empty list.
std::vector<GameState> live_components(const GameState& s);

enum class PathMark { plain, prime, doubleprime };

/// plain: P_n, nothing dominated. prime: P_{n+2} with v_0 already selected.
/// doubleprime: P_{n+4} with v_0 and v_{n+3} already selected. Each has
/// exactly n undominated vertices.
GameState marked_path(PathMark kind, int n);

} // namespace domgame
