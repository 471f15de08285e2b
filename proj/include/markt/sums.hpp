#pragma once

#include <optional>
#include <vector>

#include "markt/grundy.hpp"
#include "markt/misere.hpp"
#include "markt/move.hpp"

namespace markt {

// Ordered list of component games. Each component carries its own radix;
// mixing radices in one sum is allowed.
using SumPosition = std::vector<TaryNat>;

// Nim-value of the sum: XOR of the component g-values; 0 for the empty sum.
GrundyValue sum_grundy(const SumPosition& s);

// Normal play: P exactly when the nim-value is 0.
Outcome sum_outcome(const SumPosition& s);

// First move that makes the nim-value 0, scanning components left to right
// and within a component subtract 1, ..., subtract t-1, then divide.
// nullopt exactly when the sum is a P-position. O(c * t * length^2).
std::optional<Move> winning_move(const SumPosition& s);

}  // namespace markt
