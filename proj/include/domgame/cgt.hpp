#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domgame/dyadic.hpp"
#include "domgame/outcome.hpp"

namespace domgame::cgt {

namespace detail {
struct Node;
}

/// Handle to a canonical short game.
///
/// Values live in a process-wide hash-consed store, so two handles compare
/// equal exactly when the games are equal. The store and its operation
/// caches are guarded by a mutex; handles themselves are plain pointers and
/// may be shared freely.
class GameValue {
public:
    /// The zero game {|}.
    GameValue();

    std::span<const GameValue> left() const;
    std::span<const GameValue> right() const;

    /// Stable per-process identifier, assigned in creation order.
    std::uint32_t id() const;
    int birthday() const;

    /// Set iff the value is a (dyadic) number.
    const std::optional<Dyadic>& number() const;

    friend bool operator==(GameValue a, GameValue b) { return a.node_ == b.node_; }

private:
    explicit GameValue(const detail::Node* node) : node_(node) {}
    friend class Store;

    const detail::Node* node_;
};

struct GameValueHash {
    std::size_t operator()(GameValue g) const noexcept { return std::hash<std::uint32_t>{}(g.id()); }
};

/// Canonical form of {left | right}. Options must already be canonical
/// (every GameValue is). Removes dominated options and bypasses
/// reversible ones until neither applies.
GameValue make_game(std::span<const GameValue> left, std::span<const GameValue> right);
GameValue make_game(std::initializer_list<GameValue> left, std::initializer_list<GameValue> right);

GameValue zero();
GameValue star();
GameValue up();
GameValue down();
GameValue integer(std::int64_t n);
GameValue number(const Dyadic& d);
/// The nimber *n = {0, *, ..., *(n-1) | same}.
GameValue star_n(int n);

bool leq(GameValue g, GameValue h);
inline bool geq(GameValue g, GameValue h) { return leq(h, g); }
inline bool less(GameValue g, GameValue h) { return leq(g, h) && !leq(h, g); }
inline bool fuzzy(GameValue g, GameValue h) { return !leq(g, h) && !leq(h, g); }

GameValue negate(GameValue g);
GameValue add(GameValue g, GameValue h);

inline GameValue operator-(GameValue g) { return negate(g); }
inline GameValue operator+(GameValue g, GameValue h) { return add(g, h); }
inline GameValue operator-(GameValue g, GameValue h) { return add(g, negate(h)); }

Outcome outcome(GameValue g);

/// Numbers as integers or p/q, "*", "^", "v", otherwise "{a,b|c}" with
/// options sorted by their own display strings.
std::string display(GameValue g);

/// Parses the display grammar; brace forms are canonicalized. Throws
/// InputError on malformed text.
GameValue parse_value(std::string_view text);

std::ostream& operator<<(std::ostream& os, GameValue g);

/// Number of distinct values created so far.
std::size_t store_size();

} // namespace domgame::cgt
