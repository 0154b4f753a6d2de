#include <doctest.h>

#include <random>

#include "v2adic/lte.hpp"

using namespace v2adic;

namespace {
// Independent brute-force check: build the power difference and count.
Valuation brute_v2_pow_diff(const BigNat& x, const BigNat& y, unsigned n) {
    BigInt diff = boost::multiprecision::pow(x, n) - boost::multiprecision::pow(y, n);
    return vp_extended(diff, 2);
}
} // namespace

TEST_CASE("even-exponent closed form on known points") {
    CHECK(v2_pow_diff_even_n(3, 1, 2) == Valuation::finite(3));     // 9-1 = 8
    CHECK(v2_pow_diff_even_n(1023, 1, 2) == Valuation::finite(11));
    CHECK(v2_pow_diff_even_n(255, 1, 2) == Valuation::finite(9));   // 65024 = 2^9*127
}

TEST_CASE("odd-exponent closed form on known points") {
    CHECK(v2_pow_diff_odd_n(7, 3, 3) == Valuation::finite(2));  // 316 = 4*79
    CHECK(v2_pow_diff_odd_n(5, 1, 5) == Valuation::finite(2));  // 3124 = 4*781
    CHECK(v2_pow_diff_odd_n(9, 5, 1) == Valuation::finite(2));  // n=1 identity
}

TEST_CASE("precondition enforcement") {
    CHECK_THROWS_AS(v2_pow_diff_even_n(3, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(v2_pow_diff_even_n(3, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(v2_pow_diff_even_n(4, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(v2_pow_diff_odd_n(5, 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(v2_pow_diff_odd_n(5, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(v2_pow_diff_odd_n(5, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(v2_pow_minus_one(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(v2_pow_minus_one(9, 0), std::invalid_argument);
}

TEST_CASE("closed forms match brute force, small exhaustive") {
    for (unsigned x = 3; x <= 99; x += 2)
        for (unsigned y = 1; y <= 99; y += 2) {
            if (x == y) continue;
            for (unsigned n = 2; n <= 16; n += 2)
                CHECK(v2_pow_diff_even_n(x, y, n) == brute_v2_pow_diff(x, y, n));
            for (unsigned n = 1; n <= 15; n += 2)
                CHECK(v2_pow_diff_odd_n(x, y, n) == brute_v2_pow_diff(x, y, n));
        }
}

TEST_CASE("closed forms match brute force, random large") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 400; ++i) {
        BigNat x = 2 * BigNat(rng() % 499) + 3;
        BigNat y = 2 * BigNat(rng() % 499) + 3;
        if (x == y) continue;
        unsigned even_n = 2 * (rng() % 32) + 2; // [2, 64]
        unsigned odd_n = 2 * (rng() % 32) + 1;  // [1, 63]
        CHECK(v2_pow_diff_even_n(x, y, even_n) == brute_v2_pow_diff(x, y, even_n));
        CHECK(v2_pow_diff_odd_n(x, y, odd_n) == brute_v2_pow_diff(x, y, odd_n));
    }
}

TEST_CASE("a^b - 1 split") {
    CHECK(v2_pow_minus_one(15, 2) == Valuation::finite(5)); // 224 = 2^5*7
    CHECK(v2_pow_minus_one(9, 3) == Valuation::finite(3));  // 728 = 2^3*91
    CHECK(v2_pow_minus_one(17, 1) == Valuation::finite(4)); // identity case
    for (unsigned a = 3; a <= 255; a += 2)
        for (unsigned b = 1; b <= 32; ++b) {
            BigInt diff = boost::multiprecision::pow(BigNat(a), b) - 1;
            CHECK(v2_pow_minus_one(a, b) == vp_extended(diff, 2));
        }
}

TEST_CASE("exactly one of v2(c+1), v2(c-1) equals 1") {
    for (unsigned c = 3; c <= 2001; c += 2) {
        std::uint64_t up = v2(BigNat(c) + 1), down = v2(BigNat(c) - 1);
        CHECK(((up == 1) != (down == 1)));
        CHECK(std::max(up, down) >= 2);
    }
}

TEST_CASE("symbolic exponent agrees with concrete") {
    for (unsigned a = 3; a <= 41; a += 2)
        for (unsigned b = 1; b <= 12; ++b) {
            bool even = b % 2 == 0;
            std::uint64_t bv = even ? v2(BigNat(b)) : 0;
            CHECK(v2_pow_minus_one_sym(a, even, bv) == v2_pow_minus_one(a, b));
        }
}
