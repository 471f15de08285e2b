#pragma once

#include <cstdint>
#include <optional>

#include "markt/move.hpp"
#include "markt/tary.hpp"

namespace markt {

// P: the previous player wins under perfect play. N: the next player wins.
enum class Outcome { P, N };

const char* to_string(Outcome o);

// Exponent m when x = t^m (digits are a single 1 over m zeros); nullopt
// otherwise, including x = 0.
std::optional<std::size_t> is_power_of_t(const TaryNat& x);

// Misere outcome of a single game. Zero is N (the player to move has already
// won). Powers of t are P exactly at even exponents; every other position is
// P exactly when its representation ends in an odd number of zeros.
// Valid for all t >= 2.
Outcome misere_outcome(const TaryNat& x);

// For an N-position x > 0, the first option with misere outcome P, scanning
// subtract 1, ..., subtract t-1, then divide. NoWinningMove (nullopt) when
// x = 0 or x is a P-position.
std::optional<Move> misere_winning_move(const TaryNat& x);

}  // namespace markt
