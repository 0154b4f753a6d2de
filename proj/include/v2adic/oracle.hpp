#pragma once

#include "v2adic/predictor.hpp"
#include "v2adic/valuation.hpp"

namespace v2adic {

constexpr std::uint64_t kDefaultOracleCap = 4096;

/// Ground truth for v2(a^b - c^d) without materializing the powers: compute
/// both sides mod 2^K, doubling K from 64 while the difference vanishes.
/// A nonzero difference r certifies v2(r) < K, so the result is exact; if K
/// reaches the cap with r = 0 only the bound AtLeast(cap) is known.
inline Prediction v2_oracle(const BigNat& a, const BigNat& b, const BigNat& c,
                            const BigNat& d, std::uint64_t cap = kDefaultOracleCap) {
    if (!detail::is_odd(a) || !detail::is_odd(c) || a < 1 || c < 1)
        throw std::invalid_argument("v2_oracle: a and c must be odd and >= 1");
    if (b < 1 || d < 1)
        throw std::invalid_argument("v2_oracle: b and d must be >= 1");
    if (cap < 64)
        throw std::invalid_argument("v2_oracle: cap must be >= 64");
    std::uint64_t K = 64;
    for (;;) {
        const BigNat mask = (BigNat(1) << K) - 1;
        BigNat r = (modpow2(a, b, K) - modpow2(c, d, K)) & mask;
        if (r != 0)
            return Prediction::exact(v2(r));
        if (K >= cap)
            return Prediction::at_least(cap);
        K = std::min(K * 2, cap);
    }
}

enum class EqualPower { Yes, No, Unknown };

/// Decides a^b == c^d when cheap: a bit-length argument rules out most
/// mismatches; small powers are compared exactly; anything else is Unknown.
inline EqualPower detect_equal_power(const BigNat& a, const BigNat& b, const BigNat& c,
                                     const BigNat& d, std::uint64_t bit_budget) {
    if (!detail::is_odd(a) || !detail::is_odd(c) || a < 1 || c < 1)
        throw std::invalid_argument("detect_equal_power: a and c must be odd and >= 1");
    if (b < 1 || d < 1)
        throw std::invalid_argument("detect_equal_power: b and d must be >= 1");
    // bitlen(x^e) lies in (e*(bitlen(x)-1), e*bitlen(x)]; disjoint intervals
    // rule equality out without computing anything.
    auto bit_range = [](const BigNat& x, const BigNat& e) {
        if (x == 1) return std::pair<BigNat, BigNat>{1, 1};
        BigNat len = boost::multiprecision::msb(x) + 1;
        return std::pair<BigNat, BigNat>{e * (len - 1) + 1, e * len};
    };
    auto [llo, lhi] = bit_range(a, b);
    auto [rlo, rhi] = bit_range(c, d);
    if (lhi < rlo || rhi < llo)
        return EqualPower::No;
    if (lhi <= bit_budget && rhi <= bit_budget) {
        BigNat pa = (a == 1) ? BigNat(1) : boost::multiprecision::pow(a, static_cast<unsigned>(b));
        BigNat pc = (c == 1) ? BigNat(1) : boost::multiprecision::pow(c, static_cast<unsigned>(d));
        return pa == pc ? EqualPower::Yes : EqualPower::No;
    }
    return EqualPower::Unknown;
}

} // namespace v2adic
