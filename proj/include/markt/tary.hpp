#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace markt {

// Base of the game. Digits must fit a native integer, so t is capped at 2^31-1.
struct Radix {
    explicit Radix(std::uint32_t base);

    std::uint32_t t;

    friend bool operator==(const Radix&, const Radix&) = default;
};

// Maximal run of equal digits at the least-significant end of a nonzero number:
// the digit preceding the run (if any) differs from `digit`.
struct TrailingRun {
    std::uint32_t digit;
    std::size_t count;
};

enum class Format { decimal, base_t };

// A nonnegative integer as canonical base-t digits, least significant first.
// Zero is the empty sequence; the most-significant stored digit is never 0.
class TaryNat {
public:
    explicit TaryNat(Radix radix) : radix_(radix) {}

    // Validates every digit against the radix and strips high zeros.
    static TaryNat from_digits(std::vector<std::uint32_t> lsd_digits, Radix radix);
    static TaryNat from_value(std::uint64_t value, Radix radix);

    const Radix& radix() const { return radix_; }
    const std::vector<std::uint32_t>& digits() const { return digits_; }
    std::size_t length() const { return digits_.size(); }
    bool is_zero() const { return digits_.empty(); }

    // Throws std::overflow_error when the value exceeds 64 bits.
    std::uint64_t to_uint64() const;

    friend bool operator==(const TaryNat&, const TaryNat&) = default;

private:
    struct canonical_tag {};
    TaryNat(std::vector<std::uint32_t> digits, Radix radix, canonical_tag)
        : digits_(std::move(digits)), radix_(radix) {}

    std::vector<std::uint32_t> digits_;
    Radix radix_;
};

// Reads a position. decimal accepts [0-9]+. base_t accepts digit symbols
// 0-9a-z (most significant first) when t <= 36, or a dot-separated list of
// decimal digit values when t > 36.
TaryNat parse_position(std::string_view text, Radix radix, Format format);

// Inverse of parse_position; zero renders as "0" in both formats.
std::string format_position(const TaryNat& x, Format format);

// Throws std::invalid_argument when x is zero.
TrailingRun trailing_run(const TaryNat& x);

// x - i for 1 <= i <= t-1 and x >= i. O(length) worst case (borrow chain).
TaryNat sub_small(const TaryNat& x, std::uint32_t i);

// floor(x / t): drops the least-significant digit.
TaryNat div_by_t(const TaryNat& x);

// The distinct options of x: {x-i : 1 <= i <= min(value, t-1)} plus floor(x/t)
// for x > 0, the empty set for x = 0. Materializes up to t elements; callers
// with astronomically large t should enumerate moves themselves.
std::vector<TaryNat> options(const TaryNat& x);

// Value order for positions sharing one radix; throws on mixed radices.
bool value_less(const TaryNat& a, const TaryNat& b);

}  // namespace markt
