#include "markt/sums.hpp"

#include <stdexcept>

namespace markt {

GrundyValue sum_grundy(const SumPosition& s) {
    GrundyValue nim = 0;
    for (const TaryNat& c : s) nim ^= grundy(c);
    return nim;
}

Outcome sum_outcome(const SumPosition& s) {
    return sum_grundy(s) == 0 ? Outcome::P : Outcome::N;
}

std::optional<Move> winning_move(const SumPosition& s) {
    const GrundyValue total = sum_grundy(s);
    if (total == 0) return std::nullopt;
    for (std::size_t idx = 0; idx < s.size(); ++idx) {
        const TaryNat& c = s[idx];
        if (c.is_zero()) continue;
        const std::uint32_t t = c.radix().t;
        const GrundyValue target = total ^ grundy(c);
        const std::uint32_t max_sub = c.length() >= 2 ? t - 1 : c.digits()[0];
        for (std::uint32_t i = 1; i <= max_sub; ++i) {
            TaryNat o = sub_small(c, i);
            if (grundy(o) == target)
                return Move{idx, MoveKind::subtract, i, std::move(o)};
        }
        TaryNat down = div_by_t(c);
        if (grundy(down) == target)
            return Move{idx, MoveKind::divide, 0, std::move(down)};
    }
    // A nonzero nim-value always has a balancing move: some component has
    // target < g, and mex guarantees an option at every smaller g-value.
    throw std::logic_error("winning_move: no balancing move found");
}

}  // namespace markt
