#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "domgame/cgt.hpp"
#include "domgame/game_state.hpp"
#include "domgame/impartial.hpp"

namespace domgame {

/// Exhaustive game-value search on a colored graph under normal play.
///
/// Left options are Alice's moves on A vertices, right options Bob's on B
/// vertices; a side with no playable vertex of its color simply has no
/// options, so a stuck player loses. Positions are split into live
/// components whose values are added. Components are memoized by their
/// dominated mask with everything outside the component marked dominated.
class PartizanSolver {
public:
    explicit PartizanSolver(std::shared_ptr<const Graph> graph, int max_vertices = kDefaultMaxVertices);

    cgt::GameValue value(VertexMask dominated);

private:
    cgt::GameValue position(VertexMask dominated);
    cgt::GameValue component(VertexMask dominated);

    std::shared_ptr<const Graph> graph_;
    VertexMask all_;
    VertexMask alice_;
    VertexMask bob_;
    std::unordered_map<VertexMask, cgt::GameValue> table_;
};

cgt::GameValue partizan_value(const GameState& s, int max_vertices = kDefaultMaxVertices);

/// Interval values over a colored path v_1..v_n (1-based):
///   P(i,j): subpath v_i..v_j, nothing dominated
///   X(i,j): same with v_i already dominated
///   Y(i,j): same with v_j already dominated
///   Z(i,j): same with both v_i and v_j already dominated
/// Empty and fully dominated intervals are 0.
class IntervalTables {
public:
    explicit IntervalTables(int n);

    int size() const { return n_; }

    cgt::GameValue P(int i, int j) const { return at(p_, i, j); }
    cgt::GameValue X(int i, int j) const { return at(x_, i, j); }
    cgt::GameValue Y(int i, int j) const { return at(y_, i, j); }
    cgt::GameValue Z(int i, int j) const { return at(z_, i, j); }

private:
    friend IntervalTables path_tables(std::span<const Color> colors);

    using Table = std::vector<cgt::GameValue>;
    cgt::GameValue at(const Table& t, int i, int j) const;
    cgt::GameValue& slot(Table& t, int i, int j);

    int n_;
    Table p_, x_, y_, z_;
};

/// Fills all four tables bottom-up by increasing interval length. A move at
/// v_k splits an interval into a part ending at v_{k-1} and a part starting
/// at v_{k+1}, both with the new neighbor of v_k dominated.
IntervalTables path_tables(std::span<const Color> colors);

/// Value of the colored path; throws InputError on an empty or non-A/B string.
cgt::GameValue path_dp(std::string_view colors);

/// Value of the colored cycle (length >= 3). Each move at v_k leaves the
/// other m-1 vertices as a path whose two ends are already dominated.
cgt::GameValue cycle_value(std::string_view colors);

Outcome partizan_winner(cgt::GameValue value);

} // namespace domgame
