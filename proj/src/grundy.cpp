#include "markt/grundy.hpp"

#include <cassert>
#include <stdexcept>

namespace markt {
namespace {

thread_local HardLoopStats tl_hard_stats;

template <typename Digit>
void strip_high_zeros(std::vector<Digit>& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

template <typename Digit>
std::size_t run_length_at(const std::vector<Digit>& d, std::size_t start) {
    std::size_t r = 1;
    while (start + r < d.size() && d[start + r] == d[start]) ++r;
    return r;
}

// Rewrite loop body, shared by the narrow- and wide-digit instantiations.
// Returns true when the g-value is t (odd flip count), false for t-1.
template <typename Digit>
bool hard_loop(std::vector<Digit> s, std::uint32_t t) {
    const Digit tm1 = static_cast<Digit>(t - 1);
    const std::uint64_t bound = 2 * static_cast<std::uint64_t>(s.size());
    std::uint64_t iterations = 0;
    bool flipped = false;
    std::vector<Digit> next;
    next.reserve(s.size());

    for (;;) {
        const std::size_t len = s.size();
        if (len == 1 && s[0] == tm1) break;                // R(n) = t-1
        if (len == 2 && s[0] == tm1 && s[1] < tm1) break;  // R(n) = k(t-1)

        if (++iterations > bound) {
            tl_hard_stats.bound_trips++;
            throw std::logic_error("grundy_hard: rewrite bound 2*length exceeded");
        }

        next.clear();
        if (s[0] == tm1) {
            // w i^r k (t-1) with k != t-1; len >= 3 since len 2 already broke
            assert(len >= 3 && s[1] != tm1);
            const Digit k = s[1];
            const Digit i = s[2];
            const std::size_t r = run_length_at(s, 2);
            auto w_begin = s.begin() + static_cast<std::ptrdiff_t>(2 + r);
            if (i == 0 && k == 0 && r % 2 == 0) {
                // w 0^(r+1) (t-1) with an odd zero block: the options realize
                // 0..t-2 plus the subtract-(t-1) move to w 0^(r+2), so the
                // g-value is the flip of that option's; -> w 0^(r+2)
                next.insert(next.end(), r + 2, 0);
                next.insert(next.end(), w_begin, s.end());
            } else if (i > k || (i == k && r % 2 == 0)) {
                // -> w i^(r-1) (i-1) (t-1), one digit shorter
                next.push_back(tm1);
                next.push_back(static_cast<Digit>(i - 1));
                next.insert(next.end(), r - 1, i);
                next.insert(next.end(), w_begin, s.end());
            } else if (i == k) {
                // r odd: the string is w k^(r+1) (t-1); -> w k^(r+1)
                next.insert(next.end(), r + 1, k);
                next.insert(next.end(), w_begin, s.end());
            } else {
                // i < k: -> w i^(r+1) (r odd) or w i^(r+2) (r even)
                next.insert(next.end(), r + (r % 2 == 1 ? 1 : 2), i);
                next.insert(next.end(), w_begin, s.end());
            }
            flipped = !flipped;
        } else {
            // w k^(2j) with k != t-1
            const Digit k = s[0];
            const std::size_t run = run_length_at(s, 0);
            assert(run % 2 == 0);
            if (k != 0) {
                // -> w k^(2j-2) (k-1) (t-1)
                next.push_back(tm1);
                next.push_back(static_cast<Digit>(k - 1));
                next.insert(next.end(), run - 2, k);
                next.insert(next.end(),
                            s.begin() + static_cast<std::ptrdiff_t>(run), s.end());
                flipped = !flipped;
            } else {
                // s = u i 0^(2j), i != 0: -> u (i-1) (t-1); the move and the
                // 2j-1 run deletions cancel, parity unchanged
                assert(run < len && s[run] != 0);
                next.push_back(tm1);
                next.push_back(static_cast<Digit>(s[run] - 1));
                next.insert(next.end(),
                            s.begin() + static_cast<std::ptrdiff_t>(run + 1), s.end());
            }
        }
        strip_high_zeros(next);
        s.swap(next);
    }

    tl_hard_stats.calls++;
    if (iterations * tl_hard_stats.worst_bound >=
        tl_hard_stats.worst_iterations * bound) {
        tl_hard_stats.worst_iterations = iterations;
        tl_hard_stats.worst_bound = bound;
    }
    return flipped;
}

}  // namespace

GrundyValue grundy_t2(const TaryNat& x) {
    if (x.radix().t != 2) throw std::invalid_argument("grundy_t2: radix must be 2");
    const auto& d = x.digits();
    if (d.empty()) return 0;
    std::size_t zeros = 0;
    while (zeros < d.size() && d[zeros] == 0) ++zeros;
    if (zeros % 2 == 1) return 0;
    std::size_t ones = 0;
    for (std::uint32_t dig : d) ones += dig;
    return ones % 2 == 1 ? 1 : 2;
}

std::optional<GrundyValue> easy_classify(const TaryNat& x) {
    const std::uint32_t t = x.radix().t;
    if (t < 3) throw std::invalid_argument("easy_classify: requires t >= 3");
    if (x.is_zero()) return 0;
    TrailingRun run = trailing_run(x);
    if (run.digit <= t - 2 && run.count % 2 == 1) return run.digit;
    return std::nullopt;
}

GrundyValue flip(GrundyValue v, Radix radix) {
    if (v == radix.t - 1) return radix.t;
    if (v == radix.t) return radix.t - 1;
    throw std::invalid_argument("flip: value must be t-1 or t");
}

std::pair<TaryNat, std::size_t> strip_extra_t_minus_1(const TaryNat& x) {
    const std::uint32_t t = x.radix().t;
    const auto& d = x.digits();
    if (d.empty() || d[0] != t - 1)
        throw std::invalid_argument("strip_extra_t_minus_1: last digit is not t-1");
    std::size_t run = run_length_at(d, 0);
    std::vector<std::uint32_t> kept(d.begin() + static_cast<std::ptrdiff_t>(run - 1),
                                    d.end());
    return {TaryNat::from_digits(std::move(kept), x.radix()), run - 1};
}

// Validates the input shape, then runs the rewrite loop. Digits are narrowed
// to bytes when they fit so long inputs stay cache-resident.
GrundyValue grundy_hard(const TaryNat& s0) {
    const std::uint32_t t = s0.radix().t;
    if (t < 3) throw std::invalid_argument("grundy_hard: requires t >= 3");
    if (s0.is_zero()) throw std::invalid_argument("grundy_hard: position is zero");

    const auto& d = s0.digits();
    {
        std::size_t run = run_length_at(d, 0);
        if (d[0] == t - 1 ? run != 1 : run % 2 != 0)
            throw std::invalid_argument(
                "grundy_hard: position must end in a single t-1 or an even run");
    }

    bool flipped;
    if (t <= 256) {
        flipped = hard_loop(std::vector<std::uint8_t>(d.begin(), d.end()), t);
    } else {
        flipped = hard_loop(std::vector<std::uint32_t>(d), t);
    }
    return flipped ? t : t - 1;
}

GrundyValue grundy(const TaryNat& x) {
    const std::uint32_t t = x.radix().t;
    if (t == 2) return grundy_t2(x);
    if (auto easy = easy_classify(x)) return *easy;
    if (x.digits()[0] != t - 1) return grundy_hard(x);  // even run of k <= t-2
    auto [stripped, removed] = strip_extra_t_minus_1(x);
    GrundyValue v = grundy_hard(stripped);
    return removed % 2 == 1 ? flip(v, x.radix()) : v;
}

HardLoopStats hard_loop_stats() { return tl_hard_stats; }

void reset_hard_loop_stats() { tl_hard_stats = HardLoopStats{}; }

}  // namespace markt
