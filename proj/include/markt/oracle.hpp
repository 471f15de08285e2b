#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "markt/misere.hpp"
#include "markt/tary.hpp"

namespace markt {

// Least nonnegative integer not present in values (duplicates are fine).
std::uint32_t mex(std::span<const std::uint32_t> values);

// Brute-force ground truth by memoized game-tree evaluation over native
// integers. Deliberately O(n) per fresh position - the point is independence
// from the digit-based fast path, not speed. A session is confined to one
// thread; shard ranges across sessions for parallel sweeps.
class OracleSession {
public:
    static constexpr std::uint64_t default_limit = 10'000'000;
    static constexpr std::size_t max_sum_components = 3;

    explicit OracleSession(Radix radix, std::uint64_t limit = default_limit);

    const Radix& radix() const { return radix_; }
    std::uint64_t limit() const { return limit_; }

    // mex over the g-values of the options of n; throws std::out_of_range
    // past the session limit.
    std::uint32_t grundy(std::uint64_t n);

    // Win/lose recursion with the move-starved player winning: 0 is N, and
    // n > 0 is N exactly when some option is P.
    Outcome misere_outcome(std::uint64_t n);

    // Direct game-tree grundy of a sum, where one move changes exactly one
    // component. Memoized on the sorted component tuple. Components are
    // bounded by sum_component_cap() and the list by max_sum_components.
    std::uint32_t sum_grundy(std::span<const std::uint64_t> positions);

    std::uint64_t sum_component_cap() const { return sum_component_cap_; }
    // Raising the cap grows the memo key space and the recursion depth
    // (both linear in the cap); values above 10^4 are rejected.
    void set_sum_component_cap(std::uint64_t cap);

private:
    // Dense table below this value, hash map above; sweeps over contiguous
    // verification ranges stay in the dense tier.
    static constexpr std::uint64_t dense_cap = 1'000'000;
    static constexpr std::uint32_t unknown = 0xffffffffu;

    void check_limit(std::uint64_t n) const;
    std::uint32_t grundy_at(std::uint64_t m) const;
    std::uint8_t misere_at(std::uint64_t m) const;
    void extend_grundy(std::uint64_t n);
    void extend_misere(std::uint64_t n);
    void append_option_values(std::uint64_t m, std::vector<std::uint64_t>& out) const;
    std::uint32_t sum_grundy_rec(std::vector<std::uint64_t> state);
    std::uint64_t pack_sum_state(const std::vector<std::uint64_t>& state) const;

    Radix radix_;
    std::uint64_t limit_;
    std::uint64_t sum_component_cap_ = 200;

    std::vector<std::uint32_t> dense_g_;
    std::unordered_map<std::uint64_t, std::uint32_t> sparse_g_;
    std::uint64_t next_g_ = 0;  // g known for every value below this

    std::vector<std::uint8_t> dense_mis_;  // 1 = P, 0 = N
    std::unordered_map<std::uint64_t, std::uint8_t> sparse_mis_;
    std::uint64_t next_mis_ = 0;

    std::unordered_map<std::uint64_t, std::uint32_t> sum_memo_;
};

}  // namespace markt
