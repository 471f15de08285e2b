#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "markt/tary.hpp"

namespace markt {

// Sprague-Grundy value. Each position has at most t options, so 0 <= g <= t.
using GrundyValue = std::uint32_t;

// Closed form for t = 2: 0 when the binary representation has an odd number of
// trailing zeros, otherwise 1 or 2 by the parity of the count of one-digits.
GrundyValue grundy_t2(const TaryNat& x);

// Trailing-run classifier for t >= 3: g(x) = d when x ends in an odd maximal
// run of a digit d <= t-2, and g(0) = 0. Returns nullopt otherwise, in which
// case g(x) is t-1 or t.
std::optional<GrundyValue> easy_classify(const TaryNat& x);

// Swaps t-1 <-> t; an involution. Throws for any other value.
GrundyValue flip(GrundyValue v, Radix radix);

// Removes all but one trailing t-1 digit; returns the count removed.
// Requires the last digit of x to be t-1.
std::pair<TaryNat, std::size_t> strip_extra_t_minus_1(const TaryNat& x);

// g for the remaining shapes (t >= 3): s ends either in exactly one t-1 or in
// a maximal even-length run of some digit k != t-1. Always returns t-1 or t.
// Runs as a rewrite loop with a flip-parity accumulator; the loop performs at
// most 2*length(s) rewrites, enforced with an always-on check.
GrundyValue grundy_hard(const TaryNat& s);

// g(x) for any position and any t >= 2. O(length^2) total.
GrundyValue grundy(const TaryNat& x);

// High-water marks of the grundy_hard rewrite loop, accumulated per thread.
// worst_iterations/worst_bound is the call that came closest to the 2*length
// termination bound; bound_trips counts violations (always 0 unless the
// bound check in grundy_hard has thrown).
struct HardLoopStats {
    std::uint64_t calls = 0;
    std::uint64_t worst_iterations = 0;
    std::uint64_t worst_bound = 0;
    std::uint64_t bound_trips = 0;
};

HardLoopStats hard_loop_stats();
void reset_hard_loop_stats();

}  // namespace markt
