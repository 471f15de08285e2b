#include "markt/misere.hpp"

#include <stdexcept>

namespace markt {

const char* to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }

std::optional<std::size_t> is_power_of_t(const TaryNat& x) {
    const auto& d = x.digits();
    if (d.empty() || d.back() != 1) return std::nullopt;
    for (std::size_t j = 0; j + 1 < d.size(); ++j) {
        if (d[j] != 0) return std::nullopt;
    }
    return d.size() - 1;
}

Outcome misere_outcome(const TaryNat& x) {
    // The trailing-zero criterion is undefined on the empty representation;
    // the mover at 0 has already won, so 0 is N by definition.
    if (x.is_zero()) return Outcome::N;
    if (auto m = is_power_of_t(x)) return *m % 2 == 0 ? Outcome::P : Outcome::N;
    TrailingRun run = trailing_run(x);
    std::size_t zeros = run.digit == 0 ? run.count : 0;
    return zeros % 2 == 1 ? Outcome::P : Outcome::N;
}

std::optional<Move> misere_winning_move(const TaryNat& x) {
    if (x.is_zero() || misere_outcome(x) == Outcome::P) return std::nullopt;
    const std::uint32_t t = x.radix().t;
    const std::uint32_t max_sub = x.length() >= 2 ? t - 1 : x.digits()[0];
    for (std::uint32_t i = 1; i <= max_sub; ++i) {
        TaryNat o = sub_small(x, i);
        if (misere_outcome(o) == Outcome::P)
            return Move{0, MoveKind::subtract, i, std::move(o)};
    }
    TaryNat down = div_by_t(x);
    if (misere_outcome(down) == Outcome::P)
        return Move{0, MoveKind::divide, 0, std::move(down)};
    throw std::logic_error("misere_winning_move: N-position without a move to P");
}

}  // namespace markt
