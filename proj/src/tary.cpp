#include "markt/tary.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace markt {
namespace {

constexpr std::uint32_t radix_cap = 0x7fffffffu;
constexpr std::uint64_t chunk_base = 1'000'000'000ull;  // 9 decimal digits
constexpr const char* symbols = "0123456789abcdefghijklmnopqrstuvwxyz";

void strip_high_zeros(std::vector<std::uint32_t>& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

int symbol_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

std::vector<std::uint32_t> parse_decimal(std::string_view text, std::uint32_t t) {
    if (text.empty()) throw std::invalid_argument("parse_position: empty text");
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("parse_position: malformed decimal text");
    }
    // Decimal digits packed into base-10^9 chunks, most significant first.
    std::vector<std::uint32_t> chunks;
    std::size_t head = text.size() % 9;
    if (head > 0) {
        std::uint32_t v = 0;
        for (std::size_t j = 0; j < head; ++j) v = v * 10 + (text[j] - '0');
        chunks.push_back(v);
    }
    for (std::size_t pos = head; pos < text.size(); pos += 9) {
        std::uint32_t v = 0;
        for (std::size_t j = 0; j < 9; ++j) v = v * 10 + (text[pos + j] - '0');
        chunks.push_back(v);
    }

    std::vector<std::uint32_t> digits;
    std::size_t first = 0;
    while (first < chunks.size() && chunks[first] == 0) ++first;
    while (first < chunks.size()) {
        std::uint64_t rem = 0;
        for (std::size_t j = first; j < chunks.size(); ++j) {
            std::uint64_t cur = rem * chunk_base + chunks[j];
            chunks[j] = static_cast<std::uint32_t>(cur / t);
            rem = cur % t;
        }
        digits.push_back(static_cast<std::uint32_t>(rem));
        while (first < chunks.size() && chunks[first] == 0) ++first;
    }
    return digits;  // least significant first; no high zeros by construction
}

std::vector<std::uint32_t> parse_base_t(std::string_view text, std::uint32_t t) {
    if (text.empty()) throw std::invalid_argument("parse_position: empty text");
    std::vector<std::uint32_t> digits;  // most significant first while parsing
    if (t <= 36) {
        digits.reserve(text.size());
        for (char c : text) {
            int v = symbol_value(c);
            if (v < 0)
                throw std::invalid_argument("parse_position: invalid digit symbol");
            if (static_cast<std::uint32_t>(v) >= t)
                throw std::invalid_argument("parse_position: digit symbol >= t");
            digits.push_back(static_cast<std::uint32_t>(v));
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t dot = text.find('.', pos);
            std::string_view part = text.substr(
                pos, dot == std::string_view::npos ? text.size() - pos : dot - pos);
            if (part.empty())
                throw std::invalid_argument("parse_position: empty digit component");
            std::uint64_t v = 0;
            for (char c : part) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("parse_position: malformed digit component");
                v = v * 10 + static_cast<std::uint64_t>(c - '0');
                if (v >= t)
                    throw std::invalid_argument("parse_position: digit value >= t");
            }
            digits.push_back(static_cast<std::uint32_t>(v));
            if (dot == std::string_view::npos) break;
            pos = dot + 1;
        }
    }
    std::reverse(digits.begin(), digits.end());
    strip_high_zeros(digits);
    return digits;
}

std::string format_decimal(const TaryNat& x) {
    if (x.is_zero()) return "0";
    std::vector<std::uint32_t> work = x.digits();
    const std::uint64_t t = x.radix().t;
    std::vector<std::uint32_t> chunks;  // least-significant chunk first
    std::size_t top = work.size();
    while (top > 0) {
        std::uint64_t rem = 0;
        for (std::size_t j = top; j-- > 0;) {
            std::uint64_t cur = rem * t + work[j];
            work[j] = static_cast<std::uint32_t>(cur / chunk_base);
            rem = cur % chunk_base;
        }
        chunks.push_back(static_cast<std::uint32_t>(rem));
        while (top > 0 && work[top - 1] == 0) --top;
    }
    std::string out = std::to_string(chunks.back());
    char buf[16];
    for (std::size_t j = chunks.size() - 1; j-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", chunks[j]);
        out += buf;
    }
    return out;
}

std::string format_base_t(const TaryNat& x) {
    const auto& d = x.digits();
    const std::uint32_t t = x.radix().t;
    if (d.empty()) return "0";
    std::string out;
    if (t <= 36) {
        out.reserve(d.size());
        for (std::size_t j = d.size(); j-- > 0;) out.push_back(symbols[d[j]]);
    } else {
        for (std::size_t j = d.size(); j-- > 0;) {
            if (!out.empty()) out.push_back('.');
            out += std::to_string(d[j]);
        }
    }
    return out;
}

}  // namespace

Radix::Radix(std::uint32_t base) : t(base) {
    if (base < 2 || base > radix_cap)
        throw std::invalid_argument("Radix: base must be in [2, 2^31-1]");
}

TaryNat TaryNat::from_digits(std::vector<std::uint32_t> lsd_digits, Radix radix) {
    for (std::uint32_t d : lsd_digits) {
        if (d >= radix.t)
            throw std::invalid_argument("TaryNat: digit out of range for radix");
    }
    strip_high_zeros(lsd_digits);
    return TaryNat(std::move(lsd_digits), radix, canonical_tag{});
}

TaryNat TaryNat::from_value(std::uint64_t value, Radix radix) {
    std::vector<std::uint32_t> digits;
    while (value > 0) {
        digits.push_back(static_cast<std::uint32_t>(value % radix.t));
        value /= radix.t;
    }
    return TaryNat(std::move(digits), radix, canonical_tag{});
}

std::uint64_t TaryNat::to_uint64() const {
    const std::uint64_t t = radix_.t;
    std::uint64_t v = 0;
    for (std::size_t j = digits_.size(); j-- > 0;) {
        if (v > (std::numeric_limits<std::uint64_t>::max() - digits_[j]) / t)
            throw std::overflow_error("TaryNat: value exceeds 64 bits");
        v = v * t + digits_[j];
    }
    return v;
}

TaryNat parse_position(std::string_view text, Radix radix, Format format) {
    std::vector<std::uint32_t> digits = format == Format::decimal
                                            ? parse_decimal(text, radix.t)
                                            : parse_base_t(text, radix.t);
    return TaryNat::from_digits(std::move(digits), radix);
}

std::string format_position(const TaryNat& x, Format format) {
    return format == Format::decimal ? format_decimal(x) : format_base_t(x);
}

TrailingRun trailing_run(const TaryNat& x) {
    const auto& d = x.digits();
    if (d.empty()) throw std::invalid_argument("trailing_run: called on zero");
    std::size_t count = 1;
    while (count < d.size() && d[count] == d[0]) ++count;
    return TrailingRun{d[0], count};
}

TaryNat sub_small(const TaryNat& x, std::uint32_t i) {
    const std::uint32_t t = x.radix().t;
    if (i < 1 || i > t - 1)
        throw std::invalid_argument("sub_small: amount must be in [1, t-1]");
    if (x.is_zero() || (x.length() == 1 && x.digits()[0] < i))
        throw std::invalid_argument("sub_small: position smaller than amount");
    std::vector<std::uint32_t> d = x.digits();
    if (d[0] >= i) {
        d[0] -= i;
    } else {
        d[0] += t - i;
        std::size_t j = 1;
        while (d[j] == 0) d[j++] = t - 1;  // x >= t here, so the borrow lands
        --d[j];
    }
    strip_high_zeros(d);
    return TaryNat::from_digits(std::move(d), x.radix());
}

TaryNat div_by_t(const TaryNat& x) {
    if (x.length() <= 1) return TaryNat(x.radix());
    std::vector<std::uint32_t> d(x.digits().begin() + 1, x.digits().end());
    return TaryNat::from_digits(std::move(d), x.radix());
}

std::vector<TaryNat> options(const TaryNat& x) {
    if (x.is_zero()) return {};
    const std::uint32_t t = x.radix().t;
    const std::uint32_t max_sub = x.length() >= 2 ? t - 1 : x.digits()[0];
    std::vector<TaryNat> out;
    out.reserve(static_cast<std::size_t>(max_sub) + 1);
    for (std::uint32_t i = 1; i <= max_sub; ++i) out.push_back(sub_small(x, i));
    TaryNat down = div_by_t(x);
    if (std::find(out.begin(), out.end(), down) == out.end())
        out.push_back(std::move(down));
    return out;
}

bool value_less(const TaryNat& a, const TaryNat& b) {
    if (!(a.radix() == b.radix()))
        throw std::invalid_argument("value_less: mixed radices");
    if (a.length() != b.length()) return a.length() < b.length();
    const auto& da = a.digits();
    const auto& db = b.digits();
    for (std::size_t j = da.size(); j-- > 0;) {
        if (da[j] != db[j]) return da[j] < db[j];
    }
    return false;
}

}  // namespace markt
