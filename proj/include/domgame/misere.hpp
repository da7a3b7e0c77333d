#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "domgame/game_state.hpp"
#include "domgame/impartial.hpp"
#include "domgame/outcome.hpp"

namespace domgame {

enum class Convention { normal, misere };

/// Result for a player to move who has no playable vertex of their own.
///
/// Normal play: that player loses. Misère play: if the graph is fully
/// dominated the opponent just made the last move and lost, so the mover
/// wins; a partizan player stuck while vertices remain undominated loses.
constexpr bool stuck_mover_wins(Convention c, bool fully_dominated)
{
    return c == Convention::misere && fully_dominated;
}

/// Plain win/lose minimax with a table keyed on (dominated, mover). Works
/// for impartial graphs (mover ignored) and colored graphs.
class MinimaxSolver {
public:
    MinimaxSolver(std::shared_ptr<const Graph> graph, Convention convention,
                  int max_vertices = kDefaultMaxVertices);

    /// Colored graphs need a mover, uncolored graphs must not get one.
    bool mover_wins(VertexMask dominated, std::optional<Color> mover = std::nullopt);

private:
    bool solve(VertexMask dominated, int mover);

    std::shared_ptr<const Graph> graph_;
    Convention convention_;
    VertexMask all_;
    VertexMask own_[2];
    std::unordered_map<VertexMask, bool> table_[2];
};

/// Misère winner of an uncolored position.
Winner misere_winner(const GameState& s, int max_vertices = kDefaultMaxVertices);

/// Misère outcome class of a colored position.
Outcome misere_outcome(const GameState& s, int max_vertices = kDefaultMaxVertices);

enum class Family { path, cycle };

struct SweepRow {
    int n;
    Winner winner;
};

/// Misère winner of P_n (n >= 1) or C_n (n >= 3) for every n up to max_n.
/// Conjecture data only.
std::vector<SweepRow> misere_sweep(Family family, int max_n, int max_vertices = kDefaultMaxVertices);

struct PartizanSweepRow {
    int n;
    std::string colors;
    Outcome outcome;
};

/// Misère outcome of every A/B coloring of P_n or C_n up to max_n.
std::vector<PartizanSweepRow> misere_partizan_sweep(Family family, int max_n,
                                                    int max_vertices = kDefaultMaxVertices);

/// TSV rendering with a leading comment naming the convention.
std::string sweep_tsv(Family family, std::span<const SweepRow> rows);
std::string sweep_tsv(Family family, std::span<const PartizanSweepRow> rows);

} // namespace domgame
