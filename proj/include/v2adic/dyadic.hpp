#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "v2adic/valuation.hpp"

namespace v2adic {

struct NotIn2adicIntegers : std::domain_error {
    using std::domain_error::domain_error;
};
struct SignInconsistent : std::domain_error {
    using std::domain_error::domain_error;
};

/// A 2-adic integer truncated to K binary digits: residue mod 2^K plus the
/// precision K. Arithmetic keeps the minimum of the operand precisions;
/// division and the logarithm shed the documented number of bits.
struct DyadicInt {
    BigNat residue;
    std::uint64_t precision;

    DyadicInt(BigNat r, std::uint64_t K) : residue(std::move(r)), precision(K) {
        if (K < 1)
            throw std::invalid_argument("DyadicInt: precision must be >= 1");
        const BigNat mod = BigNat(1) << K;
        residue %= mod;
        if (residue < 0) residue += mod;
    }

    bool is_odd() const { return boost::multiprecision::bit_test(residue, 0); }

    DyadicInt truncated(std::uint64_t K) const {
        if (K > precision)
            throw std::invalid_argument("DyadicInt: cannot truncate to higher precision");
        return DyadicInt(residue, K);
    }
};

inline DyadicInt operator+(const DyadicInt& x, const DyadicInt& y) {
    return DyadicInt(x.residue + y.residue, std::min(x.precision, y.precision));
}
inline DyadicInt operator-(const DyadicInt& x, const DyadicInt& y) {
    return DyadicInt(x.residue - y.residue, std::min(x.precision, y.precision));
}
inline DyadicInt operator*(const DyadicInt& x, const DyadicInt& y) {
    return DyadicInt(x.residue * y.residue, std::min(x.precision, y.precision));
}
inline bool operator==(const DyadicInt& x, const DyadicInt& y) {
    return x.precision == y.precision && x.residue == y.residue;
}

namespace detail {

/// Inverse of odd y mod 2^K by Newton iteration (digit-doubling).
inline BigNat inverse_odd(const BigNat& y, std::uint64_t K) {
    BigNat z = 1;
    std::uint64_t bits = 1;
    while (bits < K) {
        bits = std::min(bits * 2, K);
        const BigNat mask = (BigNat(1) << bits) - 1;
        z = (z * (2 - ((y * z) & mask))) & mask;
    }
    return z;
}

inline std::uint64_t floor_log2(std::uint64_t n) {
    std::uint64_t r = 0;
    while (n >>= 1) ++r;
    return r;
}

} // namespace detail

/// Precision lost by the series evaluations at working precision K: covers
/// every division-by-k (and k!) the term loops perform.
inline std::uint64_t guard_bits(std::uint64_t K) {
    std::uint64_t g = detail::floor_log2(K);
    if ((std::uint64_t(1) << g) < K) ++g; // ceil
    return g + 8;
}

/// x / y in Z_2: requires v2(x) >= v2(y); the result is exact to
/// min(Kx, Ky) - v2(y) bits.
inline DyadicInt dyadic_div(const DyadicInt& x, const DyadicInt& y) {
    std::uint64_t K = std::min(x.precision, y.precision);
    if (y.residue == 0)
        throw std::invalid_argument("dyadic_div: divisor is 0 at working precision");
    std::uint64_t vy = v2(y.residue);
    if (x.residue != 0 && v2(x.residue) < vy)
        throw NotIn2adicIntegers("dyadic_div: quotient is not a 2-adic integer (v2(x) < v2(y))");
    if (vy >= K)
        throw std::invalid_argument("dyadic_div: divisor precision exhausted");
    std::uint64_t Kq = K - vy;
    BigNat xs = x.residue >> vy;
    BigNat ys = y.residue >> vy;
    return DyadicInt(xs * detail::inverse_odd(ys, Kq), Kq);
}

/// Iwasawa 2-adic logarithm of an odd unit u. Units congruent to 3 mod 4 are
/// routed through -u (log(-1) = 0), so every odd u is accepted. The series
/// log(1+x) = sum (-1)^(k+1) x^k / k runs until the term valuation
/// k*v2(x) - v2(k) clears the working precision; the divisions by k cost
/// guard_bits(K), so the result carries precision K - guard_bits(K).
inline DyadicInt dyadic_log(const DyadicInt& u) {
    if (!u.is_odd())
        throw std::invalid_argument("dyadic_log: argument must be an odd unit");
    const std::uint64_t K = u.precision;
    const std::uint64_t guard = guard_bits(K);
    if (K <= guard)
        throw std::invalid_argument("dyadic_log: precision too small for the guard");
    const BigNat mod = BigNat(1) << K;
    BigNat r = u.residue;
    if (boost::multiprecision::bit_test(r, 1)) // u = 3 mod 4
        r = mod - r;
    BigNat x = (r - 1) % mod;
    if (x == 0)
        return DyadicInt(0, K - guard);
    const std::uint64_t vx = v2(x); // >= 2 on this branch
    const BigNat mask = mod - 1;
    BigNat sum = 0;
    BigNat xpow = x;
    for (std::uint64_t k = 1; k * vx < K + detail::floor_log2(k) + 1; ++k) {
        std::uint64_t vk = (k & 1) ? 0 : v2(BigNat(k));
        BigNat term = ((xpow >> vk) * detail::inverse_odd(BigNat(k) >> vk, K)) & mask;
        sum = (k & 1) ? BigNat((sum + term) & mask) : BigNat((sum - term + mod) & mask);
        xpow = (xpow * x) & mask;
    }
    return DyadicInt(sum, K - guard);
}

/// 2-adic exponential, convergent for v2(x) >= 2. Works internally with
/// enough excess bits to absorb every division by k!, so the result is exact
/// at the input precision.
inline DyadicInt dyadic_exp(const DyadicInt& x) {
    const std::uint64_t P = x.precision;
    if (x.residue == 0)
        return DyadicInt(1, P);
    const std::uint64_t vx = v2(x.residue);
    if (vx < 2)
        throw std::invalid_argument("dyadic_exp: v2(x) must be >= 2 for convergence");
    // Terms die once k*(vx-1) >= P; v2(k!) <= k bounds the total shift loss.
    const std::uint64_t kmax = P / (vx - 1) + 2;
    const std::uint64_t W = P + kmax + 8;
    const BigNat mask = (BigNat(1) << W) - 1;
    BigNat xw = x.residue;
    BigNat sum = 1;
    BigNat term = 1;
    for (std::uint64_t k = 1; k * (vx - 1) < P + 1; ++k) {
        std::uint64_t vk = (k & 1) ? 0 : v2(BigNat(k));
        term = (term * xw) & mask;
        term = ((term >> vk) * detail::inverse_odd(BigNat(k) >> vk, W)) & mask;
        sum = (sum + term) & mask;
    }
    return DyadicInt(sum, P);
}

/// Ascending positions of the set binary digits of the residue.
inline std::vector<std::uint64_t> digit_positions(const DyadicInt& x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < x.precision; ++i)
        if (boost::multiprecision::bit_test(x.residue, i))
            out.push_back(i);
    return out;
}

/// Solves a^beta = c^d in Z_2, i.e. beta = d * log(c) / log(a), to at least
/// K digits. When a = 3 mod 4 the Iwasawa branch forgets the sign of a, so
/// beta must come out even for the solution to be consistent.
inline DyadicInt solve_exponent(const BigNat& a, const BigNat& c, const BigNat& d,
                                std::uint64_t K) {
    if (!boost::multiprecision::bit_test(a, 0) || a < 3)
        throw std::invalid_argument("solve_exponent: a must be odd and >= 3");
    if (!boost::multiprecision::bit_test(c, 0) || c < 3)
        throw std::invalid_argument("solve_exponent: c must be odd and >= 3");
    if (d < 1)
        throw std::invalid_argument("solve_exponent: d must be >= 1");
    const std::uint64_t loss_a = std::max(v2(a - 1), v2(a + 1)); // = v2(log a)
    const std::uint64_t W = K + loss_a + guard_bits(K + loss_a + 32) + 8;
    DyadicInt log_a = dyadic_log(DyadicInt(a, W));
    DyadicInt log_c = dyadic_log(DyadicInt(c, W));
    DyadicInt numerator(d * log_c.residue, log_c.precision);
    if (numerator.residue == 0 || v2(numerator.residue) < v2(log_a.residue))
        throw NotIn2adicIntegers("solve_exponent: d*log(c)/log(a) is not a 2-adic integer");
    DyadicInt beta = dyadic_div(numerator, log_a);
    // The Iwasawa branch forgets signs mod 4; a^beta and c^d must agree there.
    bool lhs_neg = boost::multiprecision::bit_test(a, 1) && beta.is_odd();
    bool rhs_neg = boost::multiprecision::bit_test(c, 1) && boost::multiprecision::bit_test(d, 0);
    if (lhs_neg != rhs_neg)
        throw SignInconsistent("solve_exponent: a^beta and c^d disagree mod 4");
    return beta;
}

} // namespace v2adic
