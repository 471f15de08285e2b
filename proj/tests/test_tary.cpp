#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "markt/tary.hpp"

using namespace markt;

namespace {

using digit_vec = std::vector<std::uint32_t>;

// Test-only increment, used to add a subtraction back one step at a time.
TaryNat add_one(const TaryNat& x) {
    digit_vec d = x.digits();
    const std::uint32_t t = x.radix().t;
    std::size_t j = 0;
    while (j < d.size() && d[j] == t - 1) d[j++] = 0;
    if (j == d.size())
        d.push_back(1);
    else
        ++d[j];
    return TaryNat::from_digits(std::move(d), x.radix());
}

TaryNat random_nat(std::mt19937_64& rng, Radix radix, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::uint32_t> dig(0, radix.t - 1);
    std::uniform_int_distribution<std::uint32_t> top(1, radix.t - 1);
    std::size_t len = len_dist(rng);
    digit_vec d(len);
    for (std::size_t j = 0; j < len; ++j) d[j] = dig(rng);
    if (len > 0) d[len - 1] = top(rng);
    return TaryNat::from_digits(std::move(d), radix);
}

}  // namespace

TEST_CASE("radix validation") {
    CHECK_THROWS_AS(Radix(0), std::invalid_argument);
    CHECK_THROWS_AS(Radix(1), std::invalid_argument);
    CHECK_THROWS_AS(Radix(0x80000000u), std::invalid_argument);
    CHECK(Radix(2).t == 2);
    CHECK(Radix(0x7fffffffu).t == 0x7fffffffu);
}

TEST_CASE("parse_position decimal") {
    CHECK(parse_position("9", Radix(3), Format::decimal).digits() == digit_vec{0, 0, 1});
    CHECK(parse_position("0", Radix(5), Format::decimal).is_zero());
    CHECK(parse_position("000", Radix(5), Format::decimal).is_zero());
    CHECK(parse_position("8", Radix(3), Format::decimal).to_uint64() == 8);
    CHECK(parse_position("12345678901234567890", Radix(7), Format::decimal)
              .to_uint64() == 12345678901234567890ull);

    CHECK_THROWS_AS(parse_position("", Radix(3), Format::decimal), std::invalid_argument);
    CHECK_THROWS_AS(parse_position("12x", Radix(3), Format::decimal), std::invalid_argument);
    CHECK_THROWS_AS(parse_position("-4", Radix(3), Format::decimal), std::invalid_argument);
}

TEST_CASE("parse_position base_t") {
    CHECK(parse_position("22", Radix(3), Format::base_t).to_uint64() == 8);
    CHECK(parse_position("100", Radix(3), Format::base_t).to_uint64() == 9);
    CHECK(parse_position("0", Radix(3), Format::base_t).is_zero());
    CHECK(parse_position("0012", Radix(3), Format::base_t).to_uint64() == 5);
    CHECK(parse_position("zz", Radix(36), Format::base_t).to_uint64() == 35 * 36 + 35);

    // dot-separated digit values for t > 36
    CHECK(parse_position("5.0.37", Radix(40), Format::base_t).to_uint64() ==
          5 * 40 * 40 + 37);
    CHECK(parse_position("0", Radix(100), Format::base_t).is_zero());

    CHECK_THROWS_AS(parse_position("3", Radix(3), Format::base_t), std::invalid_argument);
    CHECK_THROWS_AS(parse_position("2A", Radix(12), Format::base_t), std::invalid_argument);
    CHECK_THROWS_AS(parse_position("1.2", Radix(12), Format::base_t), std::invalid_argument);
    CHECK_THROWS_AS(parse_position("", Radix(12), Format::base_t), std::invalid_argument);
    CHECK_THROWS_AS(parse_position("1..2", Radix(40), Format::base_t), std::invalid_argument);
    CHECK_THROWS_AS(parse_position("40", Radix(40), Format::base_t), std::invalid_argument);
    CHECK_THROWS_AS(parse_position("1.x", Radix(40), Format::base_t), std::invalid_argument);
}

TEST_CASE("format_position") {
    CHECK(format_position(TaryNat::from_value(9, Radix(3)), Format::base_t) == "100");
    CHECK(format_position(TaryNat(Radix(3)), Format::base_t) == "0");
    CHECK(format_position(TaryNat(Radix(3)), Format::decimal) == "0");
    CHECK(format_position(TaryNat::from_value(8, Radix(3)), Format::decimal) == "8");
    CHECK(format_position(TaryNat::from_value(161, Radix(40)), Format::base_t) == "4.1");
    CHECK(format_position(TaryNat::from_value(12345678901234567890ull, Radix(7)),
                          Format::decimal) == "12345678901234567890");
}

TEST_CASE("parse/format round trip") {
    std::mt19937_64 rng(20240810);
    for (std::uint32_t t : {2u, 3u, 5u, 16u, 36u, 37u, 1000003u}) {
        Radix radix(t);
        for (int trial = 0; trial < 40; ++trial) {
            TaryNat x = random_nat(rng, radix, 60);
            for (Format f : {Format::decimal, Format::base_t}) {
                CAPTURE(t);
                CHECK(parse_position(format_position(x, f), radix, f) == x);
            }
        }
    }
}

TEST_CASE("trailing_run") {
    CHECK(trailing_run(parse_position("100", Radix(3), Format::base_t)).digit == 0);
    CHECK(trailing_run(parse_position("100", Radix(3), Format::base_t)).count == 2);
    CHECK(trailing_run(parse_position("2", Radix(3), Format::base_t)).digit == 2);
    CHECK(trailing_run(parse_position("2", Radix(3), Format::base_t)).count == 1);
    CHECK(trailing_run(parse_position("211", Radix(3), Format::base_t)).digit == 1);
    CHECK(trailing_run(parse_position("211", Radix(3), Format::base_t)).count == 2);
    CHECK_THROWS_AS(trailing_run(TaryNat(Radix(3))), std::invalid_argument);
}

TEST_CASE("sub_small") {
    Radix t3(3);
    CHECK(sub_small(TaryNat::from_value(9, t3), 1) == TaryNat::from_value(8, t3));
    CHECK(sub_small(TaryNat::from_value(5, t3), 2) == TaryNat::from_value(3, t3));
    CHECK_THROWS_AS(sub_small(TaryNat::from_value(1, t3), 2), std::invalid_argument);
    CHECK_THROWS_AS(sub_small(TaryNat::from_value(5, t3), 0), std::invalid_argument);
    CHECK_THROWS_AS(sub_small(TaryNat::from_value(5, t3), 3), std::invalid_argument);
    CHECK_THROWS_AS(sub_small(TaryNat(t3), 1), std::invalid_argument);

    SUBCASE("add-back recovers x") {
        std::mt19937_64 rng(77);
        for (std::uint32_t t : {3u, 7u, 36u}) {
            Radix radix(t);
            std::uniform_int_distribution<std::uint32_t> amt(1, t - 1);
            for (int trial = 0; trial < 30; ++trial) {
                TaryNat x = random_nat(rng, radix, 200);
                if (x.is_zero()) continue;
                std::uint32_t cap = x.length() >= 2 ? t - 1 : x.digits()[0];
                if (cap == 0) continue;
                std::uint32_t i = 1 + amt(rng) % cap;
                TaryNat y = sub_small(x, i);
                for (std::uint32_t step = 0; step < i; ++step) y = add_one(y);
                CHECK(y == x);
            }
        }
    }
}

TEST_CASE("div_by_t") {
    Radix t3(3);
    CHECK(div_by_t(TaryNat::from_value(9, t3)) == TaryNat::from_value(3, t3));
    CHECK(div_by_t(TaryNat::from_value(2, t3)).is_zero());
    CHECK(div_by_t(TaryNat(t3)).is_zero());

    SUBCASE("matches native division") {
        for (std::uint32_t t : {2u, 3u, 4u, 5u, 7u, 36u}) {
            Radix radix(t);
            for (std::uint64_t n = 0; n <= 100'000; ++n) {
                TaryNat q = div_by_t(TaryNat::from_value(n, radix));
                if (q.to_uint64() != n / t) {
                    CAPTURE(t);
                    CAPTURE(n);
                    REQUIRE(q.to_uint64() == n / t);
                }
            }
        }
    }
}

TEST_CASE("canonical form is preserved") {
    CHECK_THROWS_AS(TaryNat::from_digits({3, 1}, Radix(3)), std::invalid_argument);
    CHECK(TaryNat::from_digits({1, 0, 0}, Radix(3)).length() == 1);
    CHECK(TaryNat::from_digits({0, 0}, Radix(3)).is_zero());

    std::mt19937_64 rng(5150);
    Radix t5(5);
    for (int trial = 0; trial < 200; ++trial) {
        TaryNat x = random_nat(rng, t5, 30);
        auto check_canon = [](const TaryNat& v) {
            return v.is_zero() || v.digits().back() != 0;
        };
        CHECK(check_canon(div_by_t(x)));
        if (!x.is_zero() && (x.length() >= 2 || x.digits()[0] >= 1))
            CHECK(check_canon(sub_small(x, 1)));
    }
}

TEST_CASE("options") {
    Radix t3(3);
    auto opts5 = options(TaryNat::from_value(5, t3));
    REQUIRE(opts5.size() == 3);
    std::vector<std::uint64_t> vals;
    for (const auto& o : opts5) vals.push_back(o.to_uint64());
    CHECK(vals == std::vector<std::uint64_t>{4, 3, 1});

    auto opts1 = options(TaryNat::from_value(1, t3));
    REQUIRE(opts1.size() == 1);
    CHECK(opts1[0].is_zero());

    CHECK(options(TaryNat(t3)).empty());

    SUBCASE("at most t options, all smaller") {
        std::mt19937_64 rng(99);
        for (std::uint32_t t : {2u, 3u, 7u}) {
            Radix radix(t);
            for (int trial = 0; trial < 50; ++trial) {
                TaryNat x = random_nat(rng, radix, 12);
                auto opts = options(x);
                CHECK(opts.size() <= t);
                for (const auto& o : opts) CHECK(value_less(o, x));
                for (std::size_t a = 0; a < opts.size(); ++a)
                    for (std::size_t b = a + 1; b < opts.size(); ++b)
                        CHECK(!(opts[a] == opts[b]));
            }
        }
    }
}

TEST_CASE("value_less") {
    Radix t3(3);
    CHECK(value_less(TaryNat::from_value(8, t3), TaryNat::from_value(9, t3)));
    CHECK(!value_less(TaryNat::from_value(9, t3), TaryNat::from_value(9, t3)));
    CHECK(value_less(TaryNat(t3), TaryNat::from_value(1, t3)));
    CHECK_THROWS_AS(value_less(TaryNat(t3), TaryNat(Radix(4))), std::invalid_argument);
}

TEST_CASE("to_uint64 overflow") {
    TaryNat big = parse_position("18446744073709551616", Radix(10), Format::decimal);
    CHECK_THROWS_AS(big.to_uint64(), std::overflow_error);
    TaryNat max64 = parse_position("18446744073709551615", Radix(10), Format::decimal);
    CHECK(max64.to_uint64() == 18446744073709551615ull);
}
