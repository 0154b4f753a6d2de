#pragma once

#include "v2adic/valuation.hpp"

namespace v2adic {

namespace detail {
inline bool is_odd(const BigInt& n) { return boost::multiprecision::bit_test(abs(n), 0); }
} // namespace detail

/// v2(x^n - y^n) for odd x != y and even n >= 2:
///   v2(x-y) + v2(x+y) + v2(n) - 1.
inline Valuation v2_pow_diff_even_n(const BigNat& x, const BigNat& y, const BigNat& n) {
    if (!detail::is_odd(x) || !detail::is_odd(y))
        throw std::invalid_argument("v2_pow_diff_even_n: x and y must be odd");
    if (x == y)
        throw std::invalid_argument("v2_pow_diff_even_n: x must differ from y");
    if (n < 2 || detail::is_odd(n))
        throw std::invalid_argument("v2_pow_diff_even_n: n must be even and >= 2");
    return Valuation::finite(v2(x - y) + v2(x + y) + v2(n) - 1);
}

/// v2(x^n - y^n) for odd x != y and odd n: just v2(x-y).
inline Valuation v2_pow_diff_odd_n(const BigNat& x, const BigNat& y, const BigNat& n) {
    if (!detail::is_odd(x) || !detail::is_odd(y))
        throw std::invalid_argument("v2_pow_diff_odd_n: x and y must be odd");
    if (x == y)
        throw std::invalid_argument("v2_pow_diff_odd_n: x must differ from y");
    if (n < 1 || !detail::is_odd(n))
        throw std::invalid_argument("v2_pow_diff_odd_n: n must be odd and >= 1");
    return Valuation::finite(v2(x - y));
}

/// v2(a^b - 1) for odd a >= 3, b >= 1, by parity split on b.
inline Valuation v2_pow_minus_one(const BigNat& a, const BigNat& b) {
    if (!detail::is_odd(a) || a < 3)
        throw std::invalid_argument("v2_pow_minus_one: a must be odd and >= 3");
    if (b < 1)
        throw std::invalid_argument("v2_pow_minus_one: b must be >= 1");
    if (detail::is_odd(b))
        return Valuation::finite(v2(a - 1));
    return Valuation::finite(v2(a - 1) + v2(a + 1) + v2(b) - 1);
}

/// Same split on a symbolic exponent given as (parity, v2); v2 must be 0 for odd.
inline Valuation v2_pow_minus_one_sym(const BigNat& a, bool b_even, std::uint64_t b_v2) {
    if (!detail::is_odd(a) || a < 3)
        throw std::invalid_argument("v2_pow_minus_one: a must be odd and >= 3");
    if (!b_even)
        return Valuation::finite(v2(a - 1));
    if (b_v2 < 1)
        throw std::invalid_argument("v2_pow_minus_one: even exponent must have v2 >= 1");
    return Valuation::finite(v2(a - 1) + v2(a + 1) + b_v2 - 1);
}

} // namespace v2adic
