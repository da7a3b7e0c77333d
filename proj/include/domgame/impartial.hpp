#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>

#include "domgame/game_state.hpp"

namespace domgame {

/// Grundy value of an impartial position.
struct Nimber {
    std::uint32_t value = 0;

    constexpr Nimber() = default;
    constexpr explicit Nimber(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }
    friend constexpr Nimber operator^(Nimber a, Nimber b) { return Nimber(a.value ^ b.value); }
    constexpr Nimber& operator^=(Nimber o)
    {
        value ^= o.value;
        return *this;
    }
    friend constexpr auto operator<=>(Nimber, Nimber) = default;
};

enum class Winner { First, Second };

std::string_view to_string(Winner w);

/// Minimum excludant.
Nimber mex(std::span<const Nimber> values);

/// XOR fold; 0 for an empty list.
Nimber nim_sum(std::span<const Nimber> values);

/// Default vertex bound for exhaustive search.
inline constexpr int kDefaultMaxVertices = 28;

/// Memoized Sprague-Grundy search over one fixed uncolored graph.
///
/// Positions are split into live components first; each component's nimber
/// is the mex over its moves and the position's nimber is their XOR. The
/// table is keyed by (component live mask, dominated mask) relative to the
/// solver's graph.
class ImpartialSolver {
public:
    struct Options {
        bool use_table = true;
        bool decompose = true;
        int max_vertices = kDefaultMaxVertices;
    };

    explicit ImpartialSolver(std::shared_ptr<const Graph> graph);
    ImpartialSolver(std::shared_ptr<const Graph> graph, Options options);

    Nimber grundy(VertexMask dominated);
    Nimber grundy(const GameState& s);

    /// A move to a nimber-0 position, or nullopt when the position is lost.
    /// Throws UsageError on a terminal position.
    std::optional<Vertex> best_move(VertexMask dominated);

    std::size_t table_size() const { return table_.size(); }

private:
    struct Key {
        VertexMask live;
        VertexMask dominated;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept
        {
            std::uint64_t h = k.live * 0x9E3779B97F4A7C15ull;
            h ^= k.dominated + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };

    Nimber position(VertexMask dominated);
    Nimber component(VertexMask live, VertexMask dominated);

    std::shared_ptr<const Graph> graph_;
    Options options_;
    VertexMask all_;
    std::unordered_map<Key, Nimber, KeyHash> table_;
};

/// One-shot helpers; each builds a fresh solver. Colored graphs are a UsageError.
Nimber grundy(const GameState& s, int max_vertices = kDefaultMaxVertices);
Winner normal_winner(const GameState& s, int max_vertices = kDefaultMaxVertices);
std::optional<Vertex> best_move_normal(const GameState& s, int max_vertices = kDefaultMaxVertices);

} // namespace domgame
