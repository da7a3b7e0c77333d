#pragma once

#include <string_view>

namespace domgame {

/// Outcome class of a partizan position. Alice is Left, Bob is Right.
enum class Outcome { AliceWins, BobWins, FirstWins, SecondWins };

std::string_view to_string(Outcome o);

/// Short winner label: "Alice", "Bob", "First" or "Second".
std::string_view winner_label(Outcome o);

/// Combines who wins with Alice moving first and with Bob moving first.
constexpr Outcome outcome_from(bool alice_first_wins, bool bob_first_wins)
{
    if (alice_first_wins && bob_first_wins)
        return Outcome::FirstWins;
    if (alice_first_wins)
        return Outcome::AliceWins;
    if (bob_first_wins)
        return Outcome::BobWins;
    return Outcome::SecondWins;
}

} // namespace domgame
