#include "markt/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace markt {

std::uint32_t mex(std::span<const std::uint32_t> values) {
    std::vector<bool> seen(values.size() + 1, false);
    for (std::uint32_t v : values) {
        if (v < seen.size()) seen[v] = true;
    }
    std::uint32_t m = 0;
    while (seen[m]) ++m;
    return m;
}

OracleSession::OracleSession(Radix radix, std::uint64_t limit)
    : radix_(radix), limit_(limit) {}

void OracleSession::check_limit(std::uint64_t n) const {
    if (n > limit_)
        throw std::out_of_range("OracleSession: position exceeds the session limit");
}

std::uint32_t OracleSession::grundy_at(std::uint64_t m) const {
    return m < dense_cap ? dense_g_[m] : sparse_g_.at(m);
}

std::uint8_t OracleSession::misere_at(std::uint64_t m) const {
    return m < dense_cap ? dense_mis_[m] : sparse_mis_.at(m);
}

void OracleSession::append_option_values(std::uint64_t m,
                                         std::vector<std::uint64_t>& out) const {
    out.clear();
    const std::uint64_t t = radix_.t;
    const std::uint64_t max_sub = std::min<std::uint64_t>(m, t - 1);
    for (std::uint64_t i = 1; i <= max_sub; ++i) out.push_back(m - i);
    std::uint64_t down = m / t;
    if (std::find(out.begin(), out.end(), down) == out.end()) out.push_back(down);
}

// Subtract chains make the recursion depth linear in n, so both tables are
// filled by a plain upward sweep instead.
void OracleSession::extend_grundy(std::uint64_t n) {
    if (next_g_ == 0) {
        dense_g_.reserve(std::min<std::uint64_t>(n + 1, dense_cap));
        dense_g_.push_back(0);  // g(0) = mex of the empty option set
        next_g_ = 1;
    }
    std::vector<std::uint64_t> opts;
    std::vector<std::uint32_t> vals;
    for (std::uint64_t m = next_g_; m <= n; ++m) {
        append_option_values(m, opts);
        vals.clear();
        for (std::uint64_t o : opts) vals.push_back(grundy_at(o));
        std::uint32_t g = mex(vals);
        if (m < dense_cap)
            dense_g_.push_back(g);
        else
            sparse_g_.emplace(m, g);
        next_g_ = m + 1;
    }
}

void OracleSession::extend_misere(std::uint64_t n) {
    if (next_mis_ == 0) {
        dense_mis_.reserve(std::min<std::uint64_t>(n + 1, dense_cap));
        dense_mis_.push_back(0);  // 0 is N: the mover cannot move and wins
        next_mis_ = 1;
    }
    std::vector<std::uint64_t> opts;
    for (std::uint64_t m = next_mis_; m <= n; ++m) {
        append_option_values(m, opts);
        std::uint8_t p = 1;  // P unless some option is P
        for (std::uint64_t o : opts) {
            if (misere_at(o) == 1) {
                p = 0;
                break;
            }
        }
        if (m < dense_cap)
            dense_mis_.push_back(p);
        else
            sparse_mis_.emplace(m, p);
        next_mis_ = m + 1;
    }
}

std::uint32_t OracleSession::grundy(std::uint64_t n) {
    check_limit(n);
    if (n >= next_g_) extend_grundy(n);
    return grundy_at(n);
}

Outcome OracleSession::misere_outcome(std::uint64_t n) {
    check_limit(n);
    if (n >= next_mis_) extend_misere(n);
    return misere_at(n) == 1 ? Outcome::P : Outcome::N;
}

void OracleSession::set_sum_component_cap(std::uint64_t cap) {
    if (cap == 0 || cap > 10'000)
        throw std::invalid_argument("OracleSession: sum component cap out of range");
    sum_component_cap_ = cap;
    sum_memo_.clear();
}

std::uint64_t OracleSession::pack_sum_state(
    const std::vector<std::uint64_t>& state) const {
    const std::uint64_t base = sum_component_cap_ + 2;
    std::uint64_t key = 0;
    for (std::uint64_t v : state) key = key * base + (v + 1);
    return key;
}

std::uint32_t OracleSession::sum_grundy(std::span<const std::uint64_t> positions) {
    if (positions.size() > max_sum_components)
        throw std::out_of_range("OracleSession: too many sum components");
    for (std::uint64_t p : positions) {
        if (p > sum_component_cap_)
            throw std::out_of_range("OracleSession: sum component exceeds the cap");
    }
    std::vector<std::uint64_t> state(positions.begin(), positions.end());
    std::sort(state.begin(), state.end());
    return sum_grundy_rec(std::move(state));
}

std::uint32_t OracleSession::sum_grundy_rec(std::vector<std::uint64_t> state) {
    const std::uint64_t key = pack_sum_state(state);
    if (auto it = sum_memo_.find(key); it != sum_memo_.end()) return it->second;

    std::vector<std::uint32_t> child_values;
    std::vector<std::uint64_t> opts;
    for (std::size_t j = 0; j < state.size(); ++j) {
        if (state[j] == 0) continue;
        append_option_values(state[j], opts);
        for (std::uint64_t o : opts) {
            std::vector<std::uint64_t> child = state;
            child[j] = o;
            std::sort(child.begin(), child.end());
            child_values.push_back(sum_grundy_rec(std::move(child)));
        }
    }
    std::uint32_t g = mex(child_values);
    sum_memo_.emplace(key, g);
    return g;
}

}  // namespace markt
