#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "domgame/game_state.hpp"
#include "domgame/impartial.hpp"

namespace domgame {

// Normal-play nimbers of paths and cycles, by table lookup on n mod 4.

/// 1, 1, 2 for n = 1, 2, 3; then 0, 1, 1, 3 by n mod 4.
Nimber path_nimber(std::uint64_t n);

/// n mod 4, for both singly and doubly marked paths; n = 0 gives 0.
Nimber marked_path_nimber(PathMark kind, std::uint64_t n);

/// 1 iff n mod 4 = 3.
Nimber cycle_nimber(std::uint64_t n);

/// Nimber after a split move: (k+1) mod 4 xor (n-k) mod 4, residues taken
/// non-negative.
Nimber r_table(std::int64_t n, std::int64_t k);

struct ComponentSpec {
    enum class Kind { path, cycle } kind;
    std::uint64_t n;

    bool operator==(const ComponentSpec&) const = default;
};

/// Parses comma-separated `P<n>` / `C<n>` tokens, e.g. "P3,P6,P7".
std::vector<ComponentSpec> parse_component_spec(std::string_view spec);

Nimber component_nimber(const ComponentSpec& c);

/// XOR of the closed-form component nimbers; no search.
Nimber union_nimber(std::span<const ComponentSpec> components);
Winner union_winner(std::span<const ComponentSpec> components);

/// Materializes the union as a graph (for checking against the search).
Graph build_components(std::span<const ComponentSpec> components);

} // namespace domgame
